// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_ELLCURVE_GEOMETRIC_HPP_
#define GAMMA0_ELLCURVE_GEOMETRIC_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gamma0/ellcurve/automorphism.hpp"
#include "gamma0/ellcurve/curve.hpp"
#include "gamma0/ellcurve/torsion.hpp"

namespace gamma0 {

inline constexpr int kGeometricDegreeCap = 48;

/// Number of N-torsion points over the algebraic closure (N^2).
inline std::size_t full_torsion_size(int level) {
    check_level(level);
    return static_cast<std::size_t>(level) * static_cast<std::size_t>(level);
}

template <FiniteField F>
bool torsion_and_units_rational(const Curve<F>& e, int level) {
    const auto torsion = level == 2 ? two_torsion(e).size() : three_torsion(e).size();
    return torsion == full_torsion_size(level) && contains_roots_of_unity(e.field(), automorphism_exponent(e));
}

/// Smallest d such that over the degree-d extension of the base field every
/// N-torsion point is rational and the full automorphism group mu_2, mu_4 or mu_6
/// of E is realized.
template <FiniteField F>
int geometric_closure_degree(const Curve<F>& e, int level, int max_degree = kGeometricDegreeCap) {
    check_level(level);
    for (int d = 1; d <= max_degree; ++d) {
        const auto k = extension_of(e.field(), d);
        const Embedding embed(e.field(), k);
        if (torsion_and_units_rational(e.base_change(embed), level)) return d;
    }
    throw DegreeCapExceeded("no extension of degree <= " + std::to_string(max_degree) +
                            " splits the " + std::to_string(level) + "-torsion of " + e.describe());
}

/// Extensions of a fixed field by relative degree, with their embeddings, built on first use.
class ExtensionTower {
 public:
    explicit ExtensionTower(ExtField base) : base_(std::move(base)) {}

    const ExtField& base() const { return base_; }

    const Embedding& embedding(int d) {
        auto it = embeddings_.find(d);
        if (it == embeddings_.end()) it = embeddings_.try_emplace(d, base_, extension_of(base_, d)).first;
        return it->second;
    }

 private:
    ExtField base_;
    std::map<int, Embedding> embeddings_;
};

/// geometric_closure_degree for a curve over tower.base(), reusing the tower's fields.
inline int geometric_closure_degree(const Curve<ExtField>& e, int level, ExtensionTower& tower,
                                    int max_degree = kGeometricDegreeCap) {
    check_level(level);
    if (!(e.field() == tower.base())) throw InvalidField("curve is not defined over the tower's base field");
    for (int d = 1; d <= max_degree; ++d)
        if (torsion_and_units_rational(e.base_change(tower.embedding(d)), level)) return d;
    throw DegreeCapExceeded("no extension of degree <= " + std::to_string(max_degree) +
                            " splits the " + std::to_string(level) + "-torsion of " + e.describe());
}

/// A curve together with its base change to the field returned by geometric_closure_degree.
struct GeometricLift {
    int relative_degree;
    Embedding embed;
    Curve<ExtField> curve;
};

template <FiniteField F>
GeometricLift lift_to_closure(const Curve<F>& e, int level) {
    const int d = geometric_closure_degree(e, level);
    Embedding embed(e.field(), extension_of(e.field(), d));
    auto lifted = e.base_change(embed);
    return {d, std::move(embed), std::move(lifted)};
}

/// Isomorphism of pairs found after a further finite extension.
struct GeometricWitness {
    int relative_degree;  // over the field of the input pairs
    ExtField field;
    ExtField::Element u;
};

/// Searches extensions of degree m = 1, 2, ... of the common base field for a u
/// mapping (E, G) onto (E', G'). Curves with different j-invariants are never
/// isomorphic, so those return immediately.
inline std::optional<GeometricWitness> geometric_isomorphism(const Curve<ExtField>& e, const Gamma0Structure<ExtField>& g,
                                                             const Curve<ExtField>& e2,
                                                             const Gamma0Structure<ExtField>& g2, int max_degree = 12) {
    if (g.level != g2.level || !(e.j_invariant() == e2.j_invariant())) return std::nullopt;
    for (int m = 1; m <= max_degree; ++m) {
        const auto k = extension_of(e.field(), m);
        const Embedding embed(e.field(), k);
        const auto w = pairs_isomorphic(e.base_change(embed), base_change_structure(e, embed, g),
                                        e2.base_change(embed), base_change_structure(e2, embed, g2));
        if (w) return GeometricWitness{m, k, *w};
    }
    return std::nullopt;
}

}  // namespace gamma0

#endif  // GAMMA0_ELLCURVE_GEOMETRIC_HPP_
