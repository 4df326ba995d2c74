// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_EXACTFIELD_UPOLY_HPP_
#define GAMMA0_EXACTFIELD_UPOLY_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "gamma0/exactfield/prime_field.hpp"

namespace gamma0 {

/// Dense univariate polynomial over F, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
template <FiniteField F>
struct UPoly {
    using Element = typename F::Element;
    boost::container::small_vector<Element, 8> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Element& leading() const { return c.back(); }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        return a.c.size() == b.c.size() && std::equal(a.c.begin(), a.c.end(), b.c.begin());
    }
};

/// Arithmetic in F[x]. Holds a reference to the field; construct on the stack.
template <FiniteField F>
class PolyRing {
 public:
    using Element = typename F::Element;
    using Poly = UPoly<F>;

    explicit PolyRing(const F& field) : f_(field) {}

    const F& field() const { return f_; }

    Poly normalized(Poly p) const {
        while (!p.c.empty() && f_.is_zero(p.c.back())) p.c.pop_back();
        return p;
    }

    Poly from(std::initializer_list<Element> coeffs) const {
        Poly p;
        p.c.assign(coeffs.begin(), coeffs.end());
        return normalized(std::move(p));
    }

    /// Build from integer coefficients, lowest degree first.
    Poly from_ints(std::initializer_list<std::int64_t> coeffs) const {
        Poly p;
        for (auto v : coeffs) p.c.push_back(f_.from_int(v));
        return normalized(std::move(p));
    }

    Poly constant(const Element& a) const { return from({a}); }
    Poly x() const { return from({f_.zero(), f_.one()}); }
    Poly one() const { return constant(f_.one()); }

    Poly add(const Poly& a, const Poly& b) const {
        Poly r = a.c.size() >= b.c.size() ? a : b;
        const Poly& s = a.c.size() >= b.c.size() ? b : a;
        for (std::size_t i = 0; i < s.c.size(); ++i) r.c[i] = f_.add(r.c[i], s.c[i]);
        return normalized(std::move(r));
    }

    Poly neg(Poly a) const {
        for (auto& v : a.c) v = f_.neg(v);
        return a;
    }

    Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

    Poly scale(Poly a, const Element& s) const {
        if (f_.is_zero(s)) return {};
        for (auto& v : a.c) v = f_.mul(v, s);
        return a;
    }

    Poly mul(const Poly& a, const Poly& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, f_.zero());
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (f_.is_zero(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = f_.add(r.c[i + j], f_.mul(a.c[i], b.c[j]));
        }
        return normalized(std::move(r));
    }

    Poly monic(const Poly& a) const {
        if (a.is_zero()) return a;
        return scale(a, f_.inv(a.leading()));
    }

    /// Quotient and remainder of a by a nonzero b.
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
        if (b.is_zero()) throw ZeroInverse();
        if (a.degree() < b.degree()) return {Poly{}, a};
        Poly r = a;
        Poly q;
        q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), f_.zero());
        const Element lead_inv = f_.inv(b.leading());
        const int db = b.degree();
        for (int i = r.degree(); i >= db; --i) {
            const Element t = f_.mul(r.c[static_cast<std::size_t>(i)], lead_inv);
            q.c[static_cast<std::size_t>(i - db)] = t;
            if (f_.is_zero(t)) continue;
            for (int j = 0; j <= db; ++j) {
                auto& slot = r.c[static_cast<std::size_t>(i - db + j)];
                slot = f_.sub(slot, f_.mul(t, b.c[static_cast<std::size_t>(j)]));
            }
        }
        r.c.resize(static_cast<std::size_t>(db));
        return {normalized(std::move(q)), normalized(std::move(r))};
    }

    /// Remainder of a modulo a nonzero b.
    Poly mod(Poly r, const Poly& b) const {
        if (b.is_zero()) throw ZeroInverse();
        if (r.degree() < b.degree()) return r;
        const int db = b.degree();
        const bool monic_divisor = b.leading() == f_.one();
        const Element lead_inv = monic_divisor ? f_.one() : f_.inv(b.leading());
        for (int i = r.degree(); i >= db; --i) {
            const auto& top = r.c[static_cast<std::size_t>(i)];
            if (f_.is_zero(top)) continue;
            const Element t = monic_divisor ? top : f_.mul(top, lead_inv);
            for (int j = 0; j < db; ++j) {
                auto& slot = r.c[static_cast<std::size_t>(i - db + j)];
                slot = f_.sub(slot, f_.mul(t, b.c[static_cast<std::size_t>(j)]));
            }
        }
        r.c.resize(static_cast<std::size_t>(db));
        return normalized(std::move(r));
    }

    /// Monic gcd; gcd(0, 0) = 0.
    Poly gcd(Poly a, Poly b) const {
        while (!b.is_zero()) {
            Poly r = mod(std::move(a), b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    struct Bezout {
        Poly g, s, t;  // g = s*a + t*b, g monic
    };

    Bezout xgcd(const Poly& a, const Poly& b) const {
        Poly r0 = a, r1 = b;
        Poly s0 = one(), s1{};
        Poly t0{}, t1 = one();
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::exchange(r1, std::move(r));
            s0 = std::exchange(s1, sub(s0, mul(q, s1)));
            t0 = std::exchange(t1, sub(t0, mul(q, t1)));
        }
        if (r0.is_zero()) return {r0, s0, t0};
        const Element li = f_.inv(r0.leading());
        return {scale(r0, li), scale(s0, li), scale(t0, li)};
    }

    Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return mod(mul(a, b), m); }

    Poly powmod(Poly base, std::uint64_t e, const Poly& m) const {
        Poly result = mod(one(), m);
        base = mod(base, m);
        while (e != 0) {
            if (e & 1u) result = mulmod(result, base, m);
            e >>= 1;
            if (e != 0) base = mulmod(base, base, m);
        }
        return result;
    }

    Poly powmod(const Poly& base, const BigInt& e, const Poly& m) const {
        if (e <= std::numeric_limits<std::uint64_t>::max()) return powmod(base, static_cast<std::uint64_t>(e), m);
        Poly b = mod(base, m);
        Poly result = mod(one(), m);
        const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
        for (unsigned i = bits; i-- > 0;) {
            result = mulmod(result, result, m);
            if (boost::multiprecision::bit_test(e, i)) result = mulmod(result, b, m);
        }
        return result;
    }

    Element eval(const Poly& p, const Element& x) const {
        Element acc = f_.zero();
        for (std::size_t i = p.c.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), p.c[i]);
        return acc;
    }

    Poly derivative(const Poly& p) const {
        Poly d;
        for (std::size_t i = 1; i < p.c.size(); ++i)
            d.c.push_back(f_.mul(f_.from_int(static_cast<std::int64_t>(i)), p.c[i]));
        return normalized(std::move(d));
    }

 private:
    const F& f_;
};

}  // namespace gamma0

#endif  // GAMMA0_EXACTFIELD_UPOLY_HPP_
