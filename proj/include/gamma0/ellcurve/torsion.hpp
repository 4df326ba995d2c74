// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_ELLCURVE_TORSION_HPP_
#define GAMMA0_ELLCURVE_TORSION_HPP_

#include <algorithm>
#include <vector>

#include "gamma0/ellcurve/curve.hpp"

namespace gamma0 {

/// x^3 + A x + B as a polynomial; its roots are the x-coordinates of the points of order 2.
template <FiniteField F>
UPoly<F> two_division_polynomial(const Curve<F>& e) {
    const F& f = e.field();
    return PolyRing<F>(f).from({e.b(), e.a(), f.zero(), f.one()});
}

/// psi_3 = 3x^4 + 6A x^2 + 12B x - A^2; its roots are the x-coordinates of the points of order 3.
template <FiniteField F>
UPoly<F> three_division_polynomial(const Curve<F>& e) {
    const F& f = e.field();
    return PolyRing<F>(f).from({
        f.neg(f.mul(e.a(), e.a())),
        f.mul(f.from_int(12), e.b()),
        f.mul(f.from_int(6), e.a()),
        f.zero(),
        f.from_int(3),
    });
}

/// Rational points P with 2P = infinity, sorted (infinity first).
template <FiniteField F>
std::vector<Point<F>> two_torsion(const Curve<F>& e) {
    std::vector<Point<F>> out{Point<F>::at_infinity()};
    for (const auto& r : distinct_roots(e.field(), two_division_polynomial(e)))
        out.push_back(Point<F>::affine(r, e.field().zero()));
    return out;
}

/// Rational points P with 3P = infinity, sorted (infinity first).
template <FiniteField F>
std::vector<Point<F>> three_torsion(const Curve<F>& e) {
    const F& f = e.field();
    std::vector<Point<F>> out{Point<F>::at_infinity()};
    for (const auto& r : distinct_roots(f, three_division_polynomial(e))) {
        for (const auto& s : square_roots(f, e.rhs(r))) {
            if (f.is_zero(s)) continue;
            out.push_back(Point<F>::affine(r, s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A cyclic subgroup of order N in E(F), stored as its full sorted point set.
template <FiniteField F>
struct Gamma0Structure {
    int level = 0;
    std::vector<Point<F>> points;

    /// The smallest affine point of the subgroup.
    const Point<F>& generator() const { return points.at(1); }

    friend bool operator==(const Gamma0Structure& a, const Gamma0Structure& b) {
        return a.level == b.level && a.points == b.points;
    }
    friend bool operator<(const Gamma0Structure& a, const Gamma0Structure& b) {
        if (a.level != b.level) return a.level < b.level;
        return std::lexicographical_compare(a.points.begin(), a.points.end(), b.points.begin(), b.points.end());
    }
};

inline void check_level(int level) {
    if (level != 2 && level != 3) throw UnsupportedLevel(level);
}

/// All Gamma0(N)-structures whose points are rational over the base field, sorted.
template <FiniteField F>
std::vector<Gamma0Structure<F>> gamma0_structures(const Curve<F>& e, int level) {
    check_level(level);
    std::vector<Gamma0Structure<F>> out;
    if (level == 2) {
        for (const auto& p : two_torsion(e)) {
            if (p.infinity) continue;
            out.push_back({2, {Point<F>::at_infinity(), p}});
        }
    } else {
        for (const auto& p : three_torsion(e)) {
            if (p.infinity) continue;
            const auto q = e.negate(p);
            if (q < p) continue;  // one structure per pair {P, -P}
            out.push_back({3, {Point<F>::at_infinity(), p, q}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <FiniteField F, typename Embed>
auto base_change_structure(const Curve<F>& e, const Embed& embed, const Gamma0Structure<F>& g) {
    using Target = std::remove_cvref_t<decltype(embed.target())>;
    Gamma0Structure<Target> out{g.level, {}};
    for (const auto& p : g.points) out.points.push_back(e.base_change_point(embed, p));
    std::sort(out.points.begin(), out.points.end());
    return out;
}

}  // namespace gamma0

#endif  // GAMMA0_ELLCURVE_TORSION_HPP_
