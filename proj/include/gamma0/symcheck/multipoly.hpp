// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_SYMCHECK_MULTIPOLY_HPP_
#define GAMMA0_SYMCHECK_MULTIPOLY_HPP_

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gamma0/errors.hpp"

namespace gamma0 {

using Integer = boost::multiprecision::cpp_int;

/// Variables of the coordinate ring, in the order used for monomial comparison.
enum class Var : std::size_t { G2 = 0, G3 = 1, X0 = 2, Y0 = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<const char*, kNumVars> kVarNames{"g2", "g3", "x0", "y0"};

using Exponent = std::array<unsigned, kNumVars>;

/// Sparse polynomial in g2, g3, x0, y0 with arbitrary-precision integer coefficients.
///
/// Terms are kept in descending lexicographic order of exponent vectors and no
/// zero coefficient is ever stored.
class MultiPoly {
 public:
    using Terms = std::map<Exponent, Integer, std::greater<Exponent>>;

    MultiPoly() = default;
    MultiPoly(long long c) { add_term({0, 0, 0, 0}, Integer(c)); }  // NOLINT(google-explicit-constructor)
    MultiPoly(const Integer& c) { add_term({0, 0, 0, 0}, c); }      // NOLINT(google-explicit-constructor)

    static MultiPoly var(Var v) { return monomial(unit_exponent(v), 1); }
    static MultiPoly monomial(const Exponent& e, const Integer& c) {
        MultiPoly p;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Leading (lexicographically largest) term; undefined on the zero polynomial.
    const std::pair<const Exponent, Integer>& leading() const { return *terms_.begin(); }

    void add_term(const Exponent& e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly() - a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly pow(unsigned n) const {
        MultiPoly result(1), base = *this;
        while (n) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n) base *= base;
        }
        return result;
    }

    /// Replaces every occurrence of v by q.
    MultiPoly substitute(Var v, const MultiPoly& q) const {
        const auto i = static_cast<std::size_t>(v);
        std::map<unsigned, MultiPoly> powers;
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            Exponent rest = e;
            rest[i] = 0;
            auto it = powers.find(e[i]);
            if (it == powers.end()) it = powers.emplace(e[i], q.pow(e[i])).first;
            r += monomial(rest, c) * it->second;
        }
        return r;
    }

    Integer evaluate(const std::array<Integer, kNumVars>& at) const {
        Integer sum = 0;
        for (const auto& [e, c] : terms_) {
            Integer t = c;
            for (std::size_t i = 0; i < kNumVars; ++i) t *= boost::multiprecision::pow(at[i], e[i]);
            sum += t;
        }
        return sum;
    }

    /// Human-readable form such as "g2^3 - 27*g2^2*x0^2 + 216*g2*x0^4 - 432*x0^6".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool negative = c < 0;
            const Integer mag = negative ? Integer(-c) : c;
            if (first) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            first = false;
            const std::string mono = monomial_string(e);
            if (mono.empty()) {
                s += mag.str();
            } else {
                if (mag != 1) s += mag.str() + "*";
                s += mono;
            }
        }
        return s;
    }

    /// One string per term, signed, in the same order as to_string.
    std::vector<std::string> term_strings() const {
        std::vector<std::string> out;
        for (const auto& [e, c] : terms_) out.push_back(monomial(e, c).to_string());
        return out;
    }

 private:
    static Exponent unit_exponent(Var v) {
        Exponent e{0, 0, 0, 0};
        e[static_cast<std::size_t>(v)] = 1;
        return e;
    }
    static Exponent add_exponents(const Exponent& a, const Exponent& b) {
        Exponent r;
        for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
        return r;
    }
    static std::string monomial_string(const Exponent& e) {
        std::string s;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += kVarNames[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    Terms terms_;
};

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

/// Division of a by b with respect to the lexicographic order.
///
/// A term of the running dividend goes to the quotient when its monomial and its
/// coefficient are both divisible by the leading term of b, otherwise to the
/// remainder. So b divides a in Z[g2, g3, x0, y0] exactly when the remainder is 0.
inline DivisionResult divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    const auto& [lead_e, lead_c] = b.leading();
    DivisionResult out;
    MultiPoly rest = a;
    while (!rest.is_zero()) {
        const auto [e, c] = rest.leading();
        bool divisible = c % lead_c == 0;
        Exponent q{};
        for (std::size_t i = 0; i < kNumVars && divisible; ++i) {
            if (e[i] < lead_e[i]) divisible = false;
            else q[i] = e[i] - lead_e[i];
        }
        if (divisible) {
            const auto t = MultiPoly::monomial(q, c / lead_c);
            out.quotient += t;
            rest -= t * b;
        } else {
            out.remainder.add_term(e, c);
            rest -= MultiPoly::monomial(e, c);
        }
    }
    return out;
}

/// Weights of the variables: an element of weight w scales by u^w under
/// g2 -> u^4 g2, g3 -> u^6 g3, x0 -> u^2 x0, y0 -> u^3 y0. The invariant
/// differential has weight -1.
struct WeightGrading {
    std::array<int, kNumVars> weights{4, 6, 2, 3};
    int omega = -1;

    int of(const Exponent& e) const {
        int w = 0;
        for (std::size_t i = 0; i < kNumVars; ++i) w += weights[i] * static_cast<int>(e[i]);
        return w;
    }
};

/// The common weight of all terms, or nullopt if p is not homogeneous.
inline std::optional<int> weight_of(const MultiPoly& p, const WeightGrading& grading = {}) {
    if (p.is_zero()) throw ZeroPolynomial();
    const int w = grading.of(p.leading().first);
    for (const auto& [e, c] : p.terms())
        if (grading.of(e) != w) return std::nullopt;
    return w;
}

}  // namespace gamma0

#endif  // GAMMA0_SYMCHECK_MULTIPOLY_HPP_
