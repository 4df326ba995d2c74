// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_EXACTFIELD_EXT_FIELD_HPP_
#define GAMMA0_EXACTFIELD_EXT_FIELD_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gamma0/exactfield/prime_field.hpp"
#include "gamma0/exactfield/upoly.hpp"

namespace gamma0 {

/// Rabin's irreducibility test for a polynomial over F_p.
///
/// f of degree k is irreducible iff x^(p^k) = x mod f and
/// gcd(x^(p^(k/r)) - x, f) = 1 for every prime r dividing k.
inline bool is_irreducible(const PrimeField& fp, const UPoly<PrimeField>& f) {
    const int k = f.degree();
    if (k < 1) return false;
    if (k == 1) return true;
    const PolyRing<PrimeField> ring(fp);
    const auto monic = ring.monic(f);
    const auto x = ring.x();
    std::vector<UPoly<PrimeField>> frob(static_cast<std::size_t>(k) + 1);
    frob[0] = ring.mod(x, monic);
    for (int i = 1; i <= k; ++i) frob[static_cast<std::size_t>(i)] = ring.powmod(frob[static_cast<std::size_t>(i - 1)], fp.characteristic(), monic);
    if (!(frob[static_cast<std::size_t>(k)] == frob[0])) return false;
    for (int r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
        const auto g = ring.gcd(monic, ring.sub(frob[static_cast<std::size_t>(k / r)], x));
        if (g.degree() != 0) return false;
    }
    return true;
}

/// The finite field F_{p^k} = F_p[t]/(m(t)) for a monic irreducible m of degree k.
///
/// Without an explicit modulus, m is the first monic irreducible polynomial when
/// the low coefficient vectors (m_0, ..., m_{k-1}) are listed in lexicographic
/// order. k = 1 is allowed and yields F_p with modulus t.
class ExtField {
 public:
    static constexpr int kMaxDegree = 64;

    struct Element {
        boost::container::small_vector<std::uint32_t, 8> c;

        friend bool operator==(const Element& a, const Element& b) {
            return std::equal(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
        }
        friend bool operator<(const Element& a, const Element& b) {
            return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
        }
    };

    ExtField(std::uint64_t p, int k) : base_(p), k_(k) {
        check_degree();
        modulus_ = first_irreducible();
        order_ = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k));
    }

    /// Explicit modulus given by its low coefficients m_0..m_{k-1}; the leading 1 is implied.
    ExtField(std::uint64_t p, const std::vector<std::uint32_t>& low_coeffs)
        : base_(p), k_(static_cast<int>(low_coeffs.size())) {
        check_degree();
        modulus_ = low_coeffs;
        for (auto& v : modulus_) v %= base_.characteristic();
        modulus_.push_back(1);
        if (!is_irreducible(base_, modulus_poly()))
            throw InvalidField("modulus is reducible over F_" + std::to_string(p));
        order_ = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k_));
    }

    const PrimeField& base() const { return base_; }
    std::uint32_t characteristic() const { return base_.characteristic(); }
    int degree() const { return k_; }
    const BigInt& order() const { return order_; }

    /// Modulus coefficients, lowest first, including the leading 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    UPoly<PrimeField> modulus_poly() const {
        UPoly<PrimeField> m;
        for (auto v : modulus_) m.c.push_back({v});
        return m;
    }

    Element zero() const { return Element{decltype(Element::c)(static_cast<std::size_t>(k_), 0u)}; }
    Element one() const {
        auto e = zero();
        e.c[0] = 1;
        return e;
    }
    Element from_int(std::int64_t v) const {
        auto e = zero();
        e.c[0] = base_.from_int(v).value;
        return e;
    }
    Element from_coefficients(const std::vector<std::int64_t>& coeffs) const {
        auto e = zero();
        for (std::size_t i = 0; i < coeffs.size() && i < e.c.size(); ++i) e.c[i] = base_.from_int(coeffs[i]).value;
        return e;
    }

    bool is_zero(const Element& a) const {
        return std::all_of(a.c.begin(), a.c.end(), [](std::uint32_t v) { return v == 0; });
    }

    Element add(const Element& a, const Element& b) const {
        Element r = a;
        const std::uint32_t p = characteristic();
        for (int i = 0; i < k_; ++i) {
            std::uint32_t s = r.c[i] + b.c[i];
            r.c[i] = s >= p ? s - p : s;
        }
        return r;
    }
    Element sub(const Element& a, const Element& b) const {
        Element r = a;
        const std::uint32_t p = characteristic();
        for (int i = 0; i < k_; ++i) r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + p - b.c[i];
        return r;
    }
    Element neg(const Element& a) const {
        Element r = a;
        const std::uint32_t p = characteristic();
        for (auto& v : r.c) v = v == 0 ? 0 : p - v;
        return r;
    }

    Element mul(const Element& a, const Element& b) const {
        const std::uint64_t p = characteristic();
        if (k_ == 1) return Element{{static_cast<std::uint32_t>(std::uint64_t{a.c[0]} * b.c[0] % p)}};
        boost::container::small_vector<std::uint64_t, 16> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
        for (int i = 0; i < k_; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p;
        }
        // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for (int i = 2 * k_ - 2; i >= k_; --i) {
            const std::uint64_t t = prod[i];
            if (t == 0) continue;
            for (int j = 0; j < k_; ++j) prod[i - k_ + j] = (prod[i - k_ + j] + (p - modulus_[j]) * t) % p;
        }
        Element r;
        r.c.resize(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i]);
        return r;
    }

    Element inv(const Element& a) const {
        if (is_zero(a)) throw ZeroInverse();
        if (k_ == 1) return Element{{base_.inv({a.c[0]}).value}};
        const PolyRing<PrimeField> ring(base_);
        UPoly<PrimeField> pa;
        for (auto v : a.c) pa.c.push_back({v});
        pa = ring.normalized(pa);
        // s*a + t*m = 1
        const auto bez = ring.xgcd(pa, modulus_poly());
        auto r = zero();
        for (std::size_t i = 0; i < bez.s.c.size(); ++i) r.c[i] = bez.s.c[i].value;
        return r;
    }

    Element frobenius(const Element& a) const { return power(*this, a, std::uint64_t{characteristic()}); }

    template <typename Rng>
    Element random(Rng& rng) const {
        Element r = zero();
        std::uniform_int_distribution<std::uint32_t> dist(0, characteristic() - 1);
        for (auto& v : r.c) v = dist(rng);
        return r;
    }

    /// All elements in lexicographic coefficient order; throws beyond the enumeration cap.
    std::vector<Element> elements() const {
        if (order_ > enumeration_cap())
            throw FieldTooLarge(describe() + " exceeds the enumeration cap");
        const auto q = static_cast<std::size_t>(order_);
        std::vector<Element> out;
        out.reserve(q);
        Element e = zero();
        const std::uint32_t p = characteristic();
        for (std::size_t n = 0; n < q; ++n) {
            out.push_back(e);
            for (int i = k_ - 1; i >= 0; --i) {
                if (++e.c[i] < p) break;
                e.c[i] = 0;
            }
        }
        return out;
    }

    std::vector<std::int64_t> coefficients(const Element& a) const { return {a.c.begin(), a.c.end()}; }

    std::string to_string(const Element& a) const {
        if (k_ == 1) return std::to_string(a.c[0]);
        std::string s = "[";
        for (int i = 0; i < k_; ++i) s += (i ? "," : "") + std::to_string(a.c[i]);
        return s + "]";
    }

    std::string describe() const {
        std::string s = "F_" + std::to_string(characteristic());
        if (k_ == 1) return s;
        s += "^" + std::to_string(k_) + " = F_" + std::to_string(characteristic()) + "[t]/(";
        bool first = true;
        for (int i = k_; i >= 0; --i) {
            const auto c = modulus_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) s += " + ";
            first = false;
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i >= 1) s += "t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s + ")";
    }

    friend bool operator==(const ExtField& a, const ExtField& b) {
        return a.characteristic() == b.characteristic() && a.modulus_ == b.modulus_;
    }

 private:
    void check_degree() const {
        if (k_ < 1 || k_ > kMaxDegree)
            throw InvalidField("extension degree " + std::to_string(k_) + " out of range");
    }

    std::vector<std::uint32_t> first_irreducible() const {
        const std::uint32_t p = characteristic();
        std::vector<std::uint32_t> low(static_cast<std::size_t>(k_), 0);
        // for k >= 2 every candidate with m_0 = 0 is divisible by t
        if (k_ >= 2) low[0] = 1;
        while (true) {
            UPoly<PrimeField> f;
            for (auto v : low) f.c.push_back({v});
            f.c.push_back({1});
            if (is_irreducible(base_, f)) {
                low.push_back(1);
                return low;
            }
            int i = k_ - 1;
            for (; i >= 0; --i) {
                if (++low[static_cast<std::size_t>(i)] < p) break;
                low[static_cast<std::size_t>(i)] = 0;
            }
            if (i < 0) throw InvalidField("no irreducible polynomial found");
        }
    }

    PrimeField base_;
    int k_;
    std::vector<std::uint32_t> modulus_;
    BigInt order_;
};

}  // namespace gamma0

#endif  // GAMMA0_EXACTFIELD_EXT_FIELD_HPP_
