// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_EXACTFIELD_ROOTS_HPP_
#define GAMMA0_EXACTFIELD_ROOTS_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gamma0/exactfield/ext_field.hpp"
#include "gamma0/exactfield/prime_field.hpp"
#include "gamma0/exactfield/upoly.hpp"

namespace gamma0 {

namespace detail {

// Splits a monic squarefree product of distinct linear factors (Cantor-Zassenhaus,
// equal-degree 1). The seed is fixed, so the output is reproducible; callers sort it anyway.
template <FiniteField F>
void split_linear(const PolyRing<F>& ring, const UPoly<F>& g, const BigInt& half_order, SplitRng& rng,
                  std::vector<typename F::Element>& out) {
    const F& f = ring.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(f.neg(f.mul(g.c[0], f.inv(g.c[1]))));
        return;
    }
    const auto one = ring.one();
    while (true) {
        const auto shift = ring.from({f.random(rng), f.one()});
        const auto w = ring.powmod(shift, half_order, g);
        const auto d = ring.gcd(g, ring.sub(w, one));
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(ring, d, half_order, rng, out);
            split_linear(ring, ring.divmod(g, d).first, half_order, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Distinct roots of f in F, sorted.
template <FiniteField F>
std::vector<typename F::Element> distinct_roots(const F& field, const UPoly<F>& f) {
    using Element = typename F::Element;
    const PolyRing<F> ring(field);
    if (f.is_zero()) throw ZeroPolynomial();
    std::vector<Element> out;
    if (f.degree() == 0) return out;
    const auto monic = ring.monic(f);
    const auto x = ring.x();
    if (monic.degree() == 1) {
        out.push_back(field.neg(monic.c[0]));
        return out;
    }
    // x^(p^k) mod f, one p-th power at a time
    auto h = ring.mod(x, monic);
    for (int i = 0; i < field.degree(); ++i) h = ring.powmod(h, std::uint64_t{field.characteristic()}, monic);
    auto g = ring.gcd(monic, ring.sub(h, x));
    if (g.degree() <= 0) return out;
    // 0 is split off first so that the remaining factor consists of units only
    if (field.is_zero(g.c[0])) {
        out.push_back(field.zero());
        g = ring.divmod(g, x).first;
    }
    SplitRng rng(0x5eed5eedU);
    const BigInt half_order = (BigInt(field.order()) - 1) / 2;
    detail::split_linear(ring, g, half_order, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Over F_p stored as a degree-1 ExtField the search runs in PrimeField arithmetic.
inline std::vector<ExtField::Element> distinct_roots(const ExtField& field, const UPoly<ExtField>& f) {
    if (field.degree() != 1) return distinct_roots<ExtField>(field, f);
    UPoly<PrimeField> g;
    for (const auto& c : f.c) g.c.push_back({c.c[0]});
    std::vector<ExtField::Element> out;
    for (const auto& r : distinct_roots(field.base(), g)) out.push_back(field.from_int(r.value));
    return out;
}

/// All roots of f in F, each repeated according to its multiplicity, sorted.
template <FiniteField F>
std::vector<typename F::Element> poly_roots(const F& field, const UPoly<F>& f) {
    const PolyRing<F> ring(field);
    std::vector<typename F::Element> out;
    for (const auto& r : distinct_roots(field, f)) {
        auto rest = f;
        const auto linear = ring.from({field.neg(r), field.one()});
        while (rest.degree() >= 1) {
            auto [q, rem] = ring.divmod(rest, linear);
            if (!rem.is_zero()) break;
            out.push_back(r);
            rest = std::move(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// { u in F^x : u^n = 1 }, sorted.
template <FiniteField F>
std::vector<typename F::Element> roots_of_unity(const F& field, std::uint64_t n) {
    if (n == 0) throw InvalidField("roots of unity of order 0");
    const PolyRing<F> ring(field);
    UPoly<F> f;
    f.c.assign(static_cast<std::size_t>(n) + 1, field.zero());
    f.c[0] = field.neg(field.one());
    f.c[n] = field.one();
    return distinct_roots(field, f);
}

/// Square roots of a in F, sorted (empty if a is a non-residue).
template <FiniteField F>
std::vector<typename F::Element> square_roots(const F& field, const typename F::Element& a) {
    if (field.is_zero(a)) return {field.zero()};
    const BigInt half_order = (BigInt(field.order()) - 1) / 2;
    if (!(power(field, a, half_order) == field.one())) return {};
    const PolyRing<F> ring(field);
    return distinct_roots(field, ring.from({field.neg(a), field.zero(), field.one()}));
}

/// Multiplicative order of a nonzero element, searched up to `limit`.
template <FiniteField F>
std::optional<std::uint64_t> multiplicative_order(const F& field, const typename F::Element& a,
                                                  std::uint64_t limit) {
    if (field.is_zero(a)) throw ZeroInverse();
    auto acc = a;
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (acc == field.one()) return m;
        acc = field.mul(acc, a);
    }
    return std::nullopt;
}

/// Smallest element (in the library's ordering) of exact multiplicative order n, if any.
template <FiniteField F>
std::optional<typename F::Element> primitive_root_of_unity(const F& field, std::uint64_t n) {
    for (const auto& u : roots_of_unity(field, n))
        if (multiplicative_order(field, u, n) == n) return u;
    return std::nullopt;
}

/// The degree-d extension of F with the canonical modulus.
inline ExtField extension_of(const PrimeField& field, int d) {
    return ExtField(field.characteristic(), d);
}
inline ExtField extension_of(const ExtField& field, int d) {
    return ExtField(field.characteristic(), field.degree() * d);
}

/// Ring embedding of a field into an extension of it.
class Embedding {
 public:
    Embedding(const PrimeField& from, const ExtField& to) : to_(to), generator_(to.zero()), prime_source_(true) {
        if (from.characteristic() != to.characteristic()) throw InvalidField("characteristic mismatch");
    }

    /// Sends the generator t of `from` to the smallest root of its modulus in `to`.
    Embedding(const ExtField& from, const ExtField& to) : to_(to), generator_(to.zero()), prime_source_(false) {
        if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
            throw InvalidField(from.describe() + " does not embed into " + to.describe());
        const PolyRing<ExtField> ring(to);
        UPoly<ExtField> m;
        for (auto v : from.modulus()) m.c.push_back(to.from_int(v));
        const auto roots = distinct_roots(to, m);
        if (roots.empty()) throw InvalidField("modulus has no root in " + to.describe());
        generator_ = roots.front();
    }

    const ExtField& target() const { return to_; }

    ExtField::Element operator()(const PrimeField::Element& a) const { return to_.from_int(a.value); }

    ExtField::Element operator()(const ExtField::Element& a) const {
        if (prime_source_) return to_.from_int(a.c[0]);
        auto acc = to_.zero();
        for (std::size_t i = a.c.size(); i-- > 0;) acc = to_.add(to_.mul(acc, generator_), to_.from_int(a.c[i]));
        return acc;
    }

 private:
    ExtField to_;
    ExtField::Element generator_;
    bool prime_source_;
};

}  // namespace gamma0

#endif  // GAMMA0_EXACTFIELD_ROOTS_HPP_
