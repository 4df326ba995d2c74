// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_SYMCHECK_IDENTITIES_HPP_
#define GAMMA0_SYMCHECK_IDENTITIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gamma0/errors.hpp"
#include "gamma0/symcheck/multipoly.hpp"

namespace gamma0 {

/// Outcome of one identity check. `lhs` and `rhs` are the two compared sides as
/// strings; `diff` lists the offending terms when the check fails.
struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> diff;
};

namespace sym {

inline MultiPoly g2() { return MultiPoly::var(Var::G2); }
inline MultiPoly g3() { return MultiPoly::var(Var::G3); }
inline MultiPoly x0() { return MultiPoly::var(Var::X0); }
inline MultiPoly y0() { return MultiPoly::var(Var::Y0); }

/// g2^3 - 27 g3^2
inline MultiPoly discriminant() { return g2().pow(3) - 27 * g3().pow(2); }

/// g3 at a 2-torsion point (x0, 0) of y^2 = 4x^3 - g2 x - g3.
inline MultiPoly g3_at_two_torsion() { return 4 * x0().pow(3) - g2() * x0(); }

/// D = g2 - 3 x0^2
inline MultiPoly unit_d() { return g2() - 3 * x0().pow(2); }

inline MultiPoly discriminant_at_two_torsion() { return discriminant().substitute(Var::G3, g3_at_two_torsion()); }

inline MultiPoly cofactor() { return (g2() - 12 * x0().pow(2)).pow(2); }

/// y0^2 - (4 x0^3 - g2 x0 - g3), the curve equation at (x0, y0).
inline MultiPoly curve_relation() { return y0().pow(2) - (4 * x0().pow(3) - g2() * x0() - g3()); }

}  // namespace sym

namespace detail {

inline std::string weight_string(const MultiPoly& p, const WeightGrading& grading) {
    const auto w = weight_of(p, grading);
    return w ? std::to_string(*w) : "not homogeneous";
}

/// "term : weight" for every term, used to explain an inhomogeneous polynomial.
inline std::vector<std::string> weighted_terms(const MultiPoly& p, const WeightGrading& grading) {
    std::vector<std::string> out;
    for (const auto& [e, c] : p.terms())
        out.push_back(MultiPoly::monomial(e, c).to_string() + " : weight " + std::to_string(grading.of(e)));
    return out;
}

}  // namespace detail

/// Delta restricted to g3 = 4x0^3 - g2 x0 equals (g2 - 3x0^2)(g2 - 12x0^2)^2 in Z[g2, x0].
inline CheckResult check_discriminant_factorization() {
    CheckResult r;
    r.id = "discriminant_factorization";
    r.description = "g2^3 - 27*g3^2 with g3 = 4*x0^3 - g2*x0 equals (g2 - 3*x0^2)*(g2 - 12*x0^2)^2";
    const auto lhs = sym::discriminant_at_two_torsion();
    const auto rhs = sym::unit_d() * sym::cofactor();
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.passed = lhs == rhs;
    if (!r.passed) r.diff = (lhs - rhs).term_strings();
    return r;
}

/// D divides the restricted discriminant exactly, with quotient (g2 - 12x0^2)^2.
inline CheckResult check_unit_factor_claim() {
    CheckResult r;
    r.id = "unit_factor";
    r.description = "g2 - 3*x0^2 divides the restricted discriminant with quotient (g2 - 12*x0^2)^2";
    const auto division = divide(sym::discriminant_at_two_torsion(), sym::unit_d());
    const auto expected = sym::cofactor();
    r.lhs = division.quotient.to_string();
    r.rhs = expected.to_string();
    r.passed = division.remainder.is_zero() && division.quotient == expected;
    if (!r.passed) {
        for (const auto& t : division.remainder.term_strings()) r.diff.push_back("remainder " + t);
        for (const auto& t : (division.quotient - expected).term_strings()) r.diff.push_back("quotient " + t);
    }
    return r;
}

/// Delta has weight 12, both as g2^3 - 27g3^2 and restricted to g3 = 4x0^3 - g2 x0.
inline CheckResult check_discriminant_weight(const WeightGrading& grading = {}) {
    CheckResult r;
    r.id = "discriminant_weight";
    r.description = "g2^3 - 27*g3^2 is homogeneous of weight 12, also after g3 = 4*x0^3 - g2*x0";
    const auto delta = sym::discriminant();
    const auto restricted = sym::discriminant_at_two_torsion();
    const auto w = weight_of(delta, grading);
    const auto wr = weight_of(restricted, grading);
    r.lhs = detail::weight_string(delta, grading) + ", " + detail::weight_string(restricted, grading);
    r.rhs = "12, 12";
    r.passed = w == 12 && wr == 12;
    if (w != 12) r.diff = detail::weighted_terms(delta, grading);
    if (wr != 12)
        for (const auto& t : detail::weighted_terms(restricted, grading)) r.diff.push_back(t);
    return r;
}

/// coefficient * omega^k is invariant under coordinate changes, i.e. has total weight 0.
inline CheckResult check_section_weight(const std::string& id, const MultiPoly& coefficient, int k,
                                        const WeightGrading& grading = {}) {
    CheckResult r;
    r.id = id;
    const auto c = coefficient.size() > 1 ? "(" + coefficient.to_string() + ")" : coefficient.to_string();
    r.description = c + " * omega^" + std::to_string(k) + " has weight 0";
    const auto w = weight_of(coefficient, grading);
    r.lhs = w ? std::to_string(*w + k * grading.omega) : "not homogeneous";
    r.rhs = "0";
    r.passed = w && *w + k * grading.omega == 0;
    if (!r.passed) {
        r.diff = detail::weighted_terms(coefficient, grading);
        r.diff.push_back("omega^" + std::to_string(k) + " : weight " + std::to_string(k * grading.omega));
    }
    return r;
}

/// D omega^4 for N = 2 and y0^2 omega^6 for N = 3 have weight 0. For N = 3 the curve
/// relation must also be homogeneous of the weight of y0^2, since y0^2 is only
/// determined through it.
inline CheckResult check_trivialization_weight(int level, const WeightGrading& grading = {}) {
    if (level == 2) return check_section_weight("trivialization_weight_2", sym::unit_d(), 4, grading);
    if (level != 3) throw UnsupportedLevel(level);
    auto r = check_section_weight("trivialization_weight_3", sym::y0().pow(2), 6, grading);
    const auto rel = sym::curve_relation();
    const auto wr = weight_of(rel, grading);
    const auto wy = weight_of(sym::y0().pow(2), grading);
    if (wr != wy) {
        r.passed = false;
        r.lhs += " (curve relation " + detail::weight_string(rel, grading) + ")";
        for (const auto& t : detail::weighted_terms(rel, grading)) r.diff.push_back("relation " + t);
    }
    return r;
}

/// The five identity checks, in report order.
inline std::vector<CheckResult> run_identity_suite(const WeightGrading& grading = {}) {
    return {check_discriminant_factorization(), check_unit_factor_claim(), check_discriminant_weight(grading),
            check_trivialization_weight(2, grading), check_trivialization_weight(3, grading)};
}

}  // namespace gamma0

#endif  // GAMMA0_SYMCHECK_IDENTITIES_HPP_
