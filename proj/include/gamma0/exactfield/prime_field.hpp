// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_EXACTFIELD_PRIME_FIELD_HPP_
#define GAMMA0_EXACTFIELD_PRIME_FIELD_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gamma0/errors.hpp"

namespace gamma0 {

using BigInt = boost::multiprecision::cpp_int;

/// Default bound on the size of any field whose elements get enumerated.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Enumeration cap, overridable through the GAMMA0_MAX_FIELD environment variable.
inline std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("GAMMA0_MAX_FIELD"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return v;
    }
    return kDefaultEnumerationCap;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using FieldRng = std::mt19937_64;

/// Light generator for internal randomized algorithms whose output does not depend on it.
using SplitRng = std::minstd_rand;

/// The prime field F_p for a prime p >= 5.
///
/// Elements are plain residues in [0, p). For small p an inverse table is
/// built once and shared between copies of the field.
class PrimeField {
 public:
    struct Element {
        std::uint32_t value = 0;
        friend auto operator<=>(const Element&, const Element&) = default;
    };

    static constexpr std::uint32_t kMaxCharacteristic = 1u << 31;
    static constexpr std::uint32_t kInverseTableLimit = 1u << 16;

    explicit PrimeField(std::uint64_t p)
        : p_(static_cast<std::uint32_t>(p)), reciprocal_(p < 2 ? 0 : ~std::uint64_t{0} / p + 1) {
        if (p >= kMaxCharacteristic || !is_prime(p))
            throw InvalidField("characteristic " + std::to_string(p) + " is not a supported prime");
        if (p == 2 || p == 3)
            throw InvalidField("characteristic 2 and 3 are excluded (6 must be invertible)");
        if (p_ <= kInverseTableLimit) {
            auto table = std::make_shared<std::vector<std::uint32_t>>(p_, 0);
            (*table)[1] = 1;
            // inv(i) = -(p / i) * inv(p mod i)
            for (std::uint32_t i = 2; i < p_; ++i)
                (*table)[i] = static_cast<std::uint32_t>(
                    (p_ - static_cast<std::uint64_t>(p_ / i) * (*table)[p_ % i] % p_) % p_);
            inverses_ = std::move(table);
        }
    }

    std::uint32_t characteristic() const { return p_; }
    int degree() const { return 1; }
    BigInt order() const { return BigInt(p_); }

    Element zero() const { return {0}; }
    Element one() const { return {1}; }
    Element from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    bool is_zero(Element a) const { return a.value == 0; }

    Element add(Element a, Element b) const {
        std::uint32_t s = a.value + b.value;
        if (s >= p_) s -= p_;
        return {s};
    }
    Element sub(Element a, Element b) const {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    Element neg(Element a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
    Element mul(Element a, Element b) const {
        const std::uint64_t prod = static_cast<std::uint64_t>(a.value) * b.value;
        if (p_ <= kInverseTableLimit) return {reduce32(static_cast<std::uint32_t>(prod))};
        return {static_cast<std::uint32_t>(prod % p_)};
    }
    Element inv(Element a) const {
        if (a.value == 0) throw ZeroInverse();
        if (inverses_) return {(*inverses_)[a.value]};
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a.value;
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return from_int(t);
    }

    Element frobenius(Element a) const { return a; }

    template <typename Rng>
    Element random(Rng& rng) const {
        return {static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng))};
    }

    std::vector<Element> elements() const {
        if (p_ > enumeration_cap())
            throw FieldTooLarge("F_" + std::to_string(p_) + " exceeds the enumeration cap");
        std::vector<Element> out(p_);
        for (std::uint32_t i = 0; i < p_; ++i) out[i] = {i};
        return out;
    }

    std::vector<std::int64_t> coefficients(Element a) const { return {a.value}; }
    std::string to_string(Element a) const { return std::to_string(a.value); }
    std::string describe() const { return "F_" + std::to_string(p_); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
    // a mod p for 32-bit a via a precomputed 64-bit reciprocal (Lemire, Kaser, Kurz)
    std::uint32_t reduce32(std::uint32_t a) const {
        const std::uint64_t low = reciprocal_ * a;
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(low) * p_) >> 64);
    }

    std::uint32_t p_;
    std::uint64_t reciprocal_;
    std::shared_ptr<const std::vector<std::uint32_t>> inverses_;
};

/// Requirements shared by PrimeField and ExtField.
template <typename F>
concept FiniteField = requires(const F& f, const typename F::Element& a, FieldRng& rng, SplitRng& split_rng,
                               std::int64_t n) {
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
    { f.degree() } -> std::convertible_to<int>;
    { f.order() } -> std::convertible_to<BigInt>;
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_int(n) } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.add(a, a) } -> std::same_as<typename F::Element>;
    { f.sub(a, a) } -> std::same_as<typename F::Element>;
    { f.neg(a) } -> std::same_as<typename F::Element>;
    { f.mul(a, a) } -> std::same_as<typename F::Element>;
    { f.inv(a) } -> std::same_as<typename F::Element>;
    { f.frobenius(a) } -> std::same_as<typename F::Element>;
    { f.random(rng) } -> std::same_as<typename F::Element>;
    { f.random(split_rng) } -> std::same_as<typename F::Element>;
    { f.coefficients(a) } -> std::same_as<std::vector<std::int64_t>>;
    { f.to_string(a) } -> std::same_as<std::string>;
    { a < a } -> std::convertible_to<bool>;
    { a == a } -> std::convertible_to<bool>;
};

template <FiniteField F>
typename F::Element power(const F& field, typename F::Element base, std::uint64_t e) {
    auto result = field.one();
    while (e != 0) {
        if (e & 1u) result = field.mul(result, base);
        e >>= 1;
        if (e != 0) base = field.mul(base, base);
    }
    return result;
}

template <FiniteField F>
typename F::Element power(const F& field, const typename F::Element& base, const BigInt& e) {
    if (e <= std::numeric_limits<std::uint64_t>::max()) return power(field, base, static_cast<std::uint64_t>(e));
    auto result = field.one();
    const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = field.mul(result, result);
        if (boost::multiprecision::bit_test(e, i)) result = field.mul(result, base);
    }
    return result;
}

/// p^k mod n, i.e. the field order reduced modulo n.
template <FiniteField F>
std::uint64_t order_mod(const F& field, std::uint64_t n) {
    return static_cast<std::uint64_t>(field.order() % n);
}

/// True iff mu_n is fully contained in the multiplicative group of the field.
template <FiniteField F>
bool contains_roots_of_unity(const F& field, std::uint64_t n) {
    return n == 1 || order_mod(field, n) == 1;
}

}  // namespace gamma0

#endif  // GAMMA0_EXACTFIELD_PRIME_FIELD_HPP_
