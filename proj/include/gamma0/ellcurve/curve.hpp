// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_ELLCURVE_CURVE_HPP_
#define GAMMA0_ELLCURVE_CURVE_HPP_

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gamma0/exactfield.hpp"

namespace gamma0 {

/// A point of a Weierstrass curve: either the point at infinity or an affine (x, y).
///
/// Points do not reference their curve; membership is checked by Curve.
template <FiniteField F>
struct Point {
    using Element = typename F::Element;

    bool infinity = true;
    Element x{};
    Element y{};

    static Point at_infinity() { return {}; }
    static Point affine(Element x, Element y) { return {false, std::move(x), std::move(y)}; }

    bool is_infinity() const { return infinity; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    // infinity first, then lexicographic on (x, y)
    friend bool operator<(const Point& a, const Point& b) {
        if (a.infinity || b.infinity) return a.infinity && !b.infinity;
        if (a.x == b.x) return a.y < b.y;
        return a.x < b.x;
    }
};

/// The elliptic curve y^2 = x^3 + A x + B over F, with 4A^3 + 27B^2 != 0.
///
/// The classical model y^2 = 4x^3 - g2 x - g3 is available as a read-only view
/// through g2() = -4A and g3() = -4B (substitute y -> 2y).
template <FiniteField F>
class Curve {
 public:
    using Element = typename F::Element;
    using PointT = Point<F>;

    Curve(F field, Element a, Element b) : f_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
        if (f_.is_zero(short_discriminant())) throw SingularCurve();
    }

    static Curve from_ints(const F& field, std::int64_t a, std::int64_t b) {
        return Curve(field, field.from_int(a), field.from_int(b));
    }

    const F& field() const { return f_; }
    const Element& a() const { return a_; }
    const Element& b() const { return b_; }

    bool j_is_zero() const { return f_.is_zero(a_); }
    bool j_is_1728() const { return f_.is_zero(b_); }

    /// 4A^3 + 27B^2.
    Element short_discriminant() const {
        const auto a3 = f_.mul(f_.mul(a_, a_), a_);
        const auto b2 = f_.mul(b_, b_);
        return f_.add(f_.mul(f_.from_int(4), a3), f_.mul(f_.from_int(27), b2));
    }

    /// -16(4A^3 + 27B^2).
    Element discriminant() const { return f_.mul(f_.from_int(-16), short_discriminant()); }

    Element g2() const { return f_.mul(f_.from_int(-4), a_); }
    Element g3() const { return f_.mul(f_.from_int(-4), b_); }

    /// g2^3 - 27 g3^2, computed from the classical coefficients.
    Element classical_discriminant() const {
        const auto g2v = g2();
        const auto g3v = g3();
        return f_.sub(f_.mul(f_.mul(g2v, g2v), g2v), f_.mul(f_.from_int(27), f_.mul(g3v, g3v)));
    }

    /// j = 1728 * 4A^3 / (4A^3 + 27B^2).
    Element j_invariant() const {
        const auto a3x4 = f_.mul(f_.from_int(4), f_.mul(f_.mul(a_, a_), a_));
        return f_.mul(f_.mul(f_.from_int(1728), a3x4), f_.inv(short_discriminant()));
    }

    /// x^3 + A x + B.
    Element rhs(const Element& x) const {
        return f_.add(f_.mul(f_.add(f_.mul(x, x), a_), x), b_);
    }

    bool contains(const PointT& p) const {
        return p.infinity || f_.mul(p.y, p.y) == rhs(p.x);
    }

    PointT negate(const PointT& p) const {
        if (p.infinity) return p;
        return PointT::affine(p.x, f_.neg(p.y));
    }

    /// Chord-tangent addition; throws PointsOnDifferentCurves if either input is off the curve.
    PointT add(const PointT& p, const PointT& q) const {
        if (!contains(p) || !contains(q)) throw PointsOnDifferentCurves();
        if (p.infinity) return q;
        if (q.infinity) return p;
        Element slope;
        if (p.x == q.x) {
            if (f_.is_zero(f_.add(p.y, q.y))) return PointT::at_infinity();
            const auto num = f_.add(f_.mul(f_.from_int(3), f_.mul(p.x, p.x)), a_);
            slope = f_.mul(num, f_.inv(f_.add(p.y, p.y)));
        } else {
            slope = f_.mul(f_.sub(q.y, p.y), f_.inv(f_.sub(q.x, p.x)));
        }
        const auto x3 = f_.sub(f_.sub(f_.mul(slope, slope), p.x), q.x);
        const auto y3 = f_.sub(f_.mul(slope, f_.sub(p.x, x3)), p.y);
        return PointT::affine(x3, y3);
    }

    PointT multiply(std::int64_t n, const PointT& p) const {
        PointT base = n < 0 ? negate(p) : p;
        auto e = static_cast<std::uint64_t>(n < 0 ? -n : n);
        PointT acc = PointT::at_infinity();
        while (e != 0) {
            if (e & 1u) acc = add(acc, base);
            e >>= 1;
            if (e != 0) base = add(base, base);
        }
        return acc;
    }

    /// Every rational point, infinity first; bounded by the enumeration cap.
    std::vector<PointT> points() const {
        std::vector<PointT> out{PointT::at_infinity()};
        for (const auto& x : f_.elements())
            for (const auto& y : square_roots(f_, rhs(x))) out.push_back(PointT::affine(x, y));
        return out;
    }

    /// The same curve over an extension field.
    template <typename Embed>
    auto base_change(const Embed& embed) const {
        using Target = std::remove_cvref_t<decltype(embed.target())>;
        return Curve<Target>(embed.target(), embed(a_), embed(b_));
    }

    template <typename Embed>
    auto base_change_point(const Embed& embed, const PointT& p) const {
        using Target = std::remove_cvref_t<decltype(embed.target())>;
        if (p.infinity) return Point<Target>::at_infinity();
        return Point<Target>::affine(embed(p.x), embed(p.y));
    }

    std::string describe() const {
        return "y^2 = x^3 + " + f_.to_string(a_) + "*x + " + f_.to_string(b_) + " over " + f_.describe();
    }

    friend bool operator==(const Curve& l, const Curve& r) {
        return l.f_ == r.f_ && l.a_ == r.a_ && l.b_ == r.b_;
    }

 private:
    F f_;
    Element a_;
    Element b_;
};

}  // namespace gamma0

#endif  // GAMMA0_ELLCURVE_CURVE_HPP_
