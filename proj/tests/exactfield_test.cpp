// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "gamma0/exactfield.hpp"

using namespace gamma0;

namespace {

std::vector<std::uint32_t> values(const std::vector<PrimeField::Element>& v) {
    std::vector<std::uint32_t> out;
    for (auto e : v) out.push_back(e.value);
    return out;
}

// Inverse by exhaustive search over the field.
template <typename F>
typename F::Element brute_inverse(const F& f, const typename F::Element& a) {
    for (const auto& b : f.elements())
        if (f.mul(a, b) == f.one()) return b;
    ADD_FAILURE() << "no inverse found";
    return f.zero();
}

template <typename F>
std::vector<typename F::Element> brute_roots(const F& f, const UPoly<F>& p) {
    const PolyRing<F> ring(f);
    std::vector<typename F::Element> out;
    for (const auto& x : f.elements())
        if (f.is_zero(ring.eval(p, x))) out.push_back(x);
    return out;
}

std::vector<ExtField> small_fields() {
    std::vector<ExtField> out;
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 97u}) out.emplace_back(p, 1);
    out.emplace_back(5, 2);
    out.emplace_back(7, 2);
    out.emplace_back(5, 3);
    out.emplace_back(13, 2);
    out.emplace_back(7, 3);
    out.emplace_back(5, 4);
    return out;
}

}  // namespace

TEST(PrimeField, RejectsBadCharacteristic) {
    EXPECT_THROW(PrimeField(2), InvalidField);
    EXPECT_THROW(PrimeField(3), InvalidField);
    EXPECT_THROW(PrimeField(15), InvalidField);
    EXPECT_THROW(ExtField(3, 2), InvalidField);
    EXPECT_NO_THROW(PrimeField(5));
}

TEST(PrimeField, InverseExamples) {
    const PrimeField f13(13), f7(7);
    EXPECT_EQ(f13.inv({1}).value, 1u);
    EXPECT_EQ(f13.inv({5}).value, 8u);
    EXPECT_EQ(f7.inv({3}).value, 5u);
    EXPECT_EQ(brute_inverse(f13, PrimeField::Element{5}).value, 8u);
    EXPECT_EQ(brute_inverse(f7, PrimeField::Element{3}).value, 5u);
    EXPECT_THROW(f13.inv({0}), ZeroInverse);
}

TEST(PrimeField, InverseWithoutTable) {
    const PrimeField big(1'000'003);
    const auto a = big.from_int(123456);
    EXPECT_EQ(big.mul(a, big.inv(a)), big.one());
}

TEST(ExtField, InverseMatchesExhaustiveSearch) {
    const ExtField f(5, 2);
    for (const auto& a : f.elements()) {
        if (f.is_zero(a)) {
            EXPECT_THROW(f.inv(a), ZeroInverse);
            continue;
        }
        EXPECT_EQ(f.inv(a), brute_inverse(f, a));
    }
}

TEST(RootsOfUnity, Examples) {
    const PrimeField f13(13), f7(7);
    EXPECT_EQ(values(roots_of_unity(f13, 4)), (std::vector<std::uint32_t>{1, 5, 8, 12}));
    EXPECT_EQ(values(roots_of_unity(f7, 6)), (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(values(roots_of_unity(f7, 4)), (std::vector<std::uint32_t>{1, 6}));
}

TEST(RootsOfUnity, ExhaustiveCheckSmallPrimes) {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        const PrimeField f(p);
        for (std::uint64_t n = 1; n <= 12; ++n) {
            std::vector<PrimeField::Element> expect;
            for (const auto& u : f.elements())
                if (!f.is_zero(u) && power(f, u, n) == f.one()) expect.push_back(u);
            EXPECT_EQ(roots_of_unity(f, n), expect) << "p=" << p << " n=" << n;
        }
    }
}

TEST(RootsOfUnity, CountIsGcdInEveryField) {
    for (const auto& f : small_fields()) {
        const auto q1 = static_cast<std::uint64_t>(f.order() - 1);
        for (std::uint64_t n = 1; n <= 24; ++n)
            EXPECT_EQ(roots_of_unity(f, n).size(), std::gcd(n, q1)) << f.describe() << " n=" << n;
        EXPECT_EQ(contains_roots_of_unity(f, 4), q1 % 4 == 0);
    }
    // also on fields too large to enumerate
    const ExtField big(13, 6);
    const auto q1 = big.order() - 1;
    for (std::uint64_t n : {2u, 3u, 4u, 6u, 7u, 8u, 12u, 14u})
        EXPECT_EQ(BigInt(roots_of_unity(big, n).size()), boost::multiprecision::gcd(BigInt(n), q1)) << n;
}

TEST(PolyRoots, Examples) {
    const PrimeField f13(13), f7(7);
    const PolyRing<PrimeField> r13(f13), r7(f7);
    // x^3 - x
    EXPECT_EQ(values(poly_roots(f13, r13.from_ints({0, -1, 0, 1}))), (std::vector<std::uint32_t>{0, 1, 12}));
    // x^3 + 1
    EXPECT_EQ(values(poly_roots(f7, r7.from_ints({1, 0, 0, 1}))), (std::vector<std::uint32_t>{3, 5, 6}));
    // x^2 + 1
    EXPECT_TRUE(poly_roots(f7, r7.from_ints({1, 0, 1})).empty());
}

TEST(PolyRoots, Multiplicity) {
    const PrimeField f(11);
    const PolyRing<PrimeField> ring(f);
    // (x - 2)^3 (x - 5) (x^2 + 1), and x^2 + 1 is irreducible mod 11
    auto p = ring.mul(ring.from_ints({-2, 1}), ring.from_ints({-2, 1}));
    p = ring.mul(p, ring.from_ints({-2, 1}));
    p = ring.mul(p, ring.from_ints({-5, 1}));
    p = ring.mul(p, ring.from_ints({1, 0, 1}));
    EXPECT_EQ(values(poly_roots(f, p)), (std::vector<std::uint32_t>{2, 2, 2, 5}));
    EXPECT_EQ(values(distinct_roots(f, p)), (std::vector<std::uint32_t>{2, 5}));
    EXPECT_THROW(poly_roots(f, UPoly<PrimeField>{}), ZeroPolynomial);
}

TEST(PolyRoots, AgreesWithExhaustiveEvaluation) {
    std::vector<ExtField> fields = small_fields();
    fields.emplace_back(17, 3);   // 4913
    fields.emplace_back(7, 4);    // 2401
    fields.emplace_back(9973, 1); // largest prime below 10^4
    FieldRng rng(20240601);
    std::size_t cases = 0;
    for (const auto& f : fields) {
        const PolyRing<ExtField> ring(f);
        const int trials = f.order() > 1000 ? 12 : 60;
        for (int t = 0; t < trials; ++t) {
            // a product of random linear factors times a random polynomial
            UPoly<ExtField> p = ring.one();
            const int lin = static_cast<int>(rng() % 4);
            for (int i = 0; i < lin; ++i) p = ring.mul(p, ring.from({f.random(rng), f.one()}));
            UPoly<ExtField> extra;
            const int deg = static_cast<int>(rng() % 5);
            for (int i = 0; i <= deg; ++i) extra.c.push_back(f.random(rng));
            extra.c.back() = f.one();
            p = ring.mul(p, extra);
            const auto roots = distinct_roots(f, p);
            EXPECT_EQ(roots, brute_roots(f, p)) << f.describe();
            const auto with_mult = poly_roots(f, p);
            for (const auto& r : with_mult) EXPECT_TRUE(f.is_zero(ring.eval(p, r)));
            EXPECT_LE(static_cast<int>(with_mult.size()), p.degree());
            ++cases;
        }
    }
    EXPECT_GE(cases, 500u);
}

TEST(PolyRoots, WorksBeyondEnumerationCap) {
    const ExtField f(13, 8);  // 815730721 elements
    const PolyRing<ExtField> ring(f);
    FieldRng rng(7);
    const auto a = f.random(rng), b = f.random(rng);
    auto p = ring.mul(ring.from({f.neg(a), f.one()}), ring.from({f.neg(b), f.one()}));
    p = ring.mul(p, ring.from({f.one(), f.zero(), f.one()}));  // x^2 + 1 splits in F_{13^8} too
    const auto roots = distinct_roots(f, p);
    EXPECT_EQ(roots.size(), 4u);
    for (const auto& r : roots) EXPECT_TRUE(f.is_zero(ring.eval(p, r)));
    EXPECT_THROW(f.elements(), FieldTooLarge);
}

TEST(ExtField, ModulusIsFirstIrreducibleInOrder) {
    // degree 2 over F_13: x^2 + 3x + 1 is the first irreducible with (m0, m1) lexicographic
    const ExtField f(13, 2);
    EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 3, 1}));
    const ExtField again(13, 2);
    EXPECT_EQ(f, again);
    // the brute-force check: every earlier candidate has a root
    const PrimeField fp(13);
    const PolyRing<PrimeField> ring(fp);
    for (std::uint32_t m0 = 0; m0 <= 1; ++m0)
        for (std::uint32_t m1 = 0; m1 < 13; ++m1) {
            if (m0 == 1 && m1 >= 3) break;
            const auto cand = ring.from({{m0}, {m1}, {1}});
            EXPECT_FALSE(brute_roots(fp, cand).empty());
        }
    EXPECT_TRUE(brute_roots(fp, ring.from({{1}, {3}, {1}})).empty());
    EXPECT_THROW(ExtField(13, std::vector<std::uint32_t>{12, 0}), InvalidField);  // x^2 - 1
    EXPECT_NO_THROW(ExtField(7, std::vector<std::uint32_t>{1, 0}));               // x^2 + 1
}

TEST(ExtField, IrreducibilityMatchesRootlessnessForCubics) {
    const PrimeField fp(7);
    const PolyRing<PrimeField> ring(fp);
    for (std::uint32_t a = 0; a < 7; ++a)
        for (std::uint32_t b = 0; b < 7; ++b)
            for (std::uint32_t c = 0; c < 7; ++c) {
                const auto f = ring.from({{a}, {b}, {c}, {1}});
                EXPECT_EQ(is_irreducible(fp, f), brute_roots(fp, f).empty());
            }
}

TEST(ExtField, MultiplicativeGroupOrder) {
    for (const auto& f : small_fields()) {
        const auto q1 = f.order() - 1;
        FieldRng rng(3);
        for (int i = 0; i < 20; ++i) {
            auto u = f.random(rng);
            if (f.is_zero(u)) continue;
            EXPECT_EQ(power(f, u, q1), f.one());
        }
    }
}

TEST(FieldProperties, AxiomsOnSampledTriples) {
    FieldRng rng(99);
    std::size_t cases = 0;
    auto fields = small_fields();
    fields.emplace_back(13, 6);
    fields.emplace_back(1'000'003, 1);
    for (const auto& f : fields) {
        for (int i = 0; i < 200; ++i) {
            const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
            ASSERT_EQ(f.add(a, b), f.add(b, a));
            ASSERT_EQ(f.mul(a, b), f.mul(b, a));
            ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_TRUE(f.is_zero(f.add(a, f.neg(a))));
            ASSERT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
            if (!f.is_zero(a)) {
                ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
            }
            ++cases;
        }
    }
    EXPECT_GE(cases, 1000u);
}

TEST(FieldProperties, FrobeniusIsARingHomomorphism) {
    FieldRng rng(5);
    std::size_t cases = 0;
    for (const auto& f : small_fields()) {
        for (int i = 0; i < 100; ++i) {
            const auto a = f.random(rng), b = f.random(rng);
            ASSERT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            ASSERT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
            ++cases;
        }
        // Frobenius^k is the identity
        const auto a = f.random(rng);
        auto x = a;
        for (int i = 0; i < f.degree(); ++i) x = f.frobenius(x);
        EXPECT_EQ(x, a);
    }
    EXPECT_GE(cases, 1000u);
}

TEST(SquareRoots, MatchExhaustiveSearch) {
    for (const auto& f : small_fields()) {
        if (f.order() > 1000) continue;
        for (const auto& a : f.elements()) {
            std::vector<ExtField::Element> expect;
            for (const auto& y : f.elements())
                if (f.mul(y, y) == a) expect.push_back(y);
            EXPECT_EQ(square_roots(f, a), expect);
        }
    }
}

TEST(Embedding, IsARingHomomorphism) {
    const ExtField small(7, 2), big(7, 6);
    const Embedding embed(small, big);
    FieldRng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = small.random(rng), b = small.random(rng);
        EXPECT_EQ(embed(small.add(a, b)), big.add(embed(a), embed(b)));
        EXPECT_EQ(embed(small.mul(a, b)), big.mul(embed(a), embed(b)));
    }
    EXPECT_THROW(Embedding(ExtField(7, 4), ExtField(7, 6)), InvalidField);
}
