// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_ELLCURVE_AUTOMORPHISM_HPP_
#define GAMMA0_ELLCURVE_AUTOMORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamma0/ellcurve/curve.hpp"
#include "gamma0/ellcurve/torsion.hpp"

namespace gamma0 {

/// The automorphism (x, y) -> (u^2 x, u^3 y) of a curve with u^4 A = A and u^6 B = B.
template <FiniteField F>
struct Automorphism {
    typename F::Element u;

    friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.u == b.u; }
    friend bool operator<(const Automorphism& a, const Automorphism& b) { return a.u < b.u; }
};

/// Order of the roots of unity that can act on the curve: 6 at j = 0, 4 at j = 1728, else 2.
template <FiniteField F>
std::uint64_t automorphism_exponent(const Curve<F>& e) {
    if (e.j_is_zero()) return 6;
    if (e.j_is_1728()) return 4;
    return 2;
}

template <FiniteField F>
bool is_automorphism(const Curve<F>& e, const typename F::Element& u) {
    const F& f = e.field();
    if (f.is_zero(u)) return false;
    const auto u2 = f.mul(u, u);
    const auto u4 = f.mul(u2, u2);
    const auto u6 = f.mul(u4, u2);
    return f.mul(u4, e.a()) == e.a() && f.mul(u6, e.b()) == e.b();
}

/// Every rational automorphism of E (units u with u^4 A = A, u^6 B = B), sorted by u.
template <FiniteField F>
std::vector<Automorphism<F>> automorphism_group(const Curve<F>& e) {
    std::vector<Automorphism<F>> out;
    for (const auto& u : roots_of_unity(e.field(), automorphism_exponent(e)))
        if (is_automorphism(e, u)) out.push_back({u});
    return out;
}

template <FiniteField F>
Point<F> apply_aut(const Curve<F>& e, const Automorphism<F>& aut, const Point<F>& p) {
    if (!is_automorphism(e, aut.u)) throw NotAnAutomorphism();
    if (!e.contains(p)) throw PointsOnDifferentCurves();
    if (p.infinity) return p;
    const F& f = e.field();
    const auto u2 = f.mul(aut.u, aut.u);
    return Point<F>::affine(f.mul(u2, p.x), f.mul(f.mul(u2, aut.u), p.y));
}

/// Image of a structure under (x, y) -> (u^2 x, u^3 y), without any automorphism check.
template <FiniteField F>
Gamma0Structure<F> scale_structure(const F& f, const typename F::Element& u, const Gamma0Structure<F>& g) {
    const auto u2 = f.mul(u, u);
    const auto u3 = f.mul(u2, u);
    Gamma0Structure<F> out{g.level, {}};
    for (const auto& p : g.points)
        out.points.push_back(p.infinity ? p : Point<F>::affine(f.mul(u2, p.x), f.mul(u3, p.y)));
    std::sort(out.points.begin(), out.points.end());
    return out;
}

template <FiniteField F>
Gamma0Structure<F> apply_aut(const Curve<F>& e, const Automorphism<F>& aut, const Gamma0Structure<F>& g) {
    if (!is_automorphism(e, aut.u)) throw NotAnAutomorphism();
    return scale_structure(e.field(), aut.u, g);
}

/// Automorphisms of E mapping the point set of G onto itself, sorted by u.
template <FiniteField F>
std::vector<Automorphism<F>> stabilizer(const Curve<F>& e, const Gamma0Structure<F>& g) {
    std::vector<Automorphism<F>> out;
    for (const auto& aut : automorphism_group(e))
        if (scale_structure(e.field(), aut.u, g) == g) out.push_back(aut);
    return out;
}

/// Order of the character u -> u^{-1} (the action on dx/y) restricted to `stab`.
///
/// This is the lcm of the multiplicative orders of the inverses; for a cyclic
/// group mu_n it equals n.
template <FiniteField F>
std::uint64_t character_of_stabilizer(const F& f, std::span<const Automorphism<F>> stab) {
    std::uint64_t order = 1;
    const std::uint64_t bound = std::max<std::uint64_t>(stab.size(), 1);
    for (const auto& aut : stab) {
        const auto m = multiplicative_order(f, f.inv(aut.u), bound);
        if (!m) throw Error("stabilizer is not a finite group of units of order " + std::to_string(bound));
        order = std::lcm(order, *m);
    }
    return order;
}

template <FiniteField F>
std::uint64_t character_of_stabilizer(const F& f, const std::vector<Automorphism<F>>& stab) {
    return character_of_stabilizer(f, std::span<const Automorphism<F>>(stab));
}

/// Every u with (u^4 A, u^6 B) = (A', B'), sorted.
template <FiniteField F>
std::vector<typename F::Element> isomorphism_scalars(const Curve<F>& from, const Curve<F>& to) {
    const F& f = from.field();
    if (from.j_is_zero() != to.j_is_zero() || from.j_is_1728() != to.j_is_1728()) return {};
    const PolyRing<F> ring(f);
    UPoly<F> eq;
    // x^4 - A'/A when A != 0, else x^6 - B'/B
    const bool use_a = !from.j_is_zero();
    const std::size_t deg = use_a ? 4 : 6;
    const auto ratio = use_a ? f.mul(to.a(), f.inv(from.a())) : f.mul(to.b(), f.inv(from.b()));
    eq.c.assign(deg + 1, f.zero());
    eq.c[0] = f.neg(ratio);
    eq.c[deg] = f.one();
    std::vector<typename F::Element> out;
    for (const auto& u : distinct_roots(f, eq)) {
        const auto u2 = f.mul(u, u);
        const auto u4 = f.mul(u2, u2);
        if (f.mul(u4, from.a()) == to.a() && f.mul(f.mul(u4, u2), from.b()) == to.b()) out.push_back(u);
    }
    return out;
}

/// Smallest u giving an isomorphism (E, G) -> (E', G'), if one exists over the base field.
template <FiniteField F>
std::optional<typename F::Element> pairs_isomorphic(const Curve<F>& e, const Gamma0Structure<F>& g,
                                                    const Curve<F>& e2, const Gamma0Structure<F>& g2) {
    if (g.level != g2.level) return std::nullopt;
    for (const auto& u : isomorphism_scalars(e, e2))
        if (scale_structure(e.field(), u, g) == g2) return u;
    return std::nullopt;
}

}  // namespace gamma0

#endif  // GAMMA0_ELLCURVE_AUTOMORPHISM_HPP_
