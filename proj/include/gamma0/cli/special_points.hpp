// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_CLI_SPECIAL_POINTS_HPP_
#define GAMMA0_CLI_SPECIAL_POINTS_HPP_

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "gamma0/cli/report.hpp"

namespace gamma0::cli {

struct SpecialCheck {
    std::string id;
    std::string description;
    bool passed = false;
    Json details;
};

struct SpecialPointsReport {
    std::uint64_t p = 0;
    std::vector<SpecialCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

inline void validate_prime(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw ConfigInvalid("p must be a prime >= 5, got " + std::to_string(p));
}

namespace detail {

inline Json structure_summary(const Curve<ExtField>& e, const Gamma0Structure<ExtField>& g) {
    const auto stab = stabilizer(e, g);
    return Json{{"structure", structure_json(g)},
                {"stabilizer_order", stab.size()},
                {"character_order", character_of_stabilizer(e.field(), stab)}};
}

inline Json curve_json(const Curve<ExtField>& e, int closure_degree) {
    return Json{{"a", element_json(e.a())},
                {"b", element_json(e.b())},
                {"closure_degree", closure_degree},
                {"field", e.field().describe()}};
}

// y^2 = x^3 - x: i fixes <(0,0)> and swaps the other two Gamma0(2)-structures.
inline SpecialCheck mu4_on_level_two(const PrimeField& fp) {
    SpecialCheck c;
    c.id = "mu4_level2";
    c.description = "mu_4 on the Gamma0(2)-structures of y^2 = x^3 - x: <(0,0)> fixed, <(+-1,0)> swapped";
    const auto lift = lift_to_closure(Curve<PrimeField>::from_ints(fp, -1, 0), 2);
    const auto& e = lift.curve;
    const auto& k = e.field();
    const auto i = primitive_root_of_unity(k, 4);
    const auto structures = gamma0_structures(e, 2);
    Json rows = Json::array();
    std::size_t fixed_by_i = 0, swapped = 0, order4 = 0;
    bool zero_is_special = false;
    for (const auto& g : structures) {
        auto row = structure_summary(e, g);
        const auto image = apply_aut(e, Automorphism<ExtField>{*i}, g);
        row["image_under_i"] = structure_json(image);
        if (image == g) ++fixed_by_i;
        else if (std::count(structures.begin(), structures.end(), image)) ++swapped;
        if (row["stabilizer_order"] == 4) {
            ++order4;
            zero_is_special = k.is_zero(g.generator().x);
        }
        rows.push_back(row);
    }
    c.details = Json{{"curve", curve_json(e, lift.relative_degree)}, {"i", element_json(*i)}, {"structures", rows}};
    c.passed = structures.size() == 3 && fixed_by_i == 1 && swapped == 2 && order4 == 1 && zero_is_special;
    return c;
}

// y^2 = x^3 + 1: a primitive 6th root of unity permutes the three Gamma0(2)-structures cyclically.
inline SpecialCheck mu6_three_cycle(const PrimeField& fp) {
    SpecialCheck c;
    c.id = "mu6_three_cycle";
    c.description = "mu_6 permutes the three Gamma0(2)-structures of y^2 = x^3 + 1 in a 3-cycle";
    const auto lift = lift_to_closure(Curve<PrimeField>::from_ints(fp, 0, 1), 2);
    const auto& e = lift.curve;
    const auto& k = e.field();
    const auto eta = primitive_root_of_unity(k, 6);
    const Automorphism<ExtField> gen{*eta};
    const auto structures = gamma0_structures(e, 2);
    Json rows = Json::array();
    bool cycle = structures.size() == 3;
    for (const auto& g : structures) {
        auto row = structure_summary(e, g);
        const auto once = apply_aut(e, gen, g);
        const auto twice = apply_aut(e, gen, once);
        const auto thrice = apply_aut(e, gen, twice);
        row["image_under_eta"] = structure_json(once);
        cycle = cycle && once != g && twice != g && thrice == g && row["stabilizer_order"] == 2;
        rows.push_back(row);
    }
    c.details = Json{{"curve", curve_json(e, lift.relative_degree)}, {"eta", element_json(*eta)}, {"structures", rows}};
    c.passed = cycle;
    return c;
}

// y^2 = x^3 + 1: {infinity, (0, +-1)} is the only Gamma0(3)-structure fixed by mu_6.
inline SpecialCheck mu6_fixed_level_three(const PrimeField& fp) {
    SpecialCheck c;
    c.id = "mu6_fixed_level3";
    c.description = "mu_6 fixes the Gamma0(3)-structure {infinity, (0, +-1)} of y^2 = x^3 + 1, and no other";
    const auto lift = lift_to_closure(Curve<PrimeField>::from_ints(fp, 0, 1), 3);
    const auto& e = lift.curve;
    const auto& k = e.field();
    const auto structures = gamma0_structures(e, 3);
    Json rows = Json::array();
    std::size_t order6 = 0, order2 = 0;
    bool special_is_zero = false;
    for (const auto& g : structures) {
        auto row = structure_summary(e, g);
        if (row["stabilizer_order"] == 6 && row["character_order"] == 6) {
            ++order6;
            special_is_zero = k.is_zero(g.generator().x) && (g.generator().y == k.one() || g.generator().y == k.neg(k.one()));
        }
        if (row["stabilizer_order"] == 2) ++order2;
        rows.push_back(row);
    }
    c.details = Json{{"curve", curve_json(e, lift.relative_degree)}, {"structures", rows}};
    c.passed = structures.size() == 4 && order6 == 1 && order2 == 3 && special_is_zero;
    return c;
}

// y^2 = x^3 - x: no Gamma0(3)-structure is fixed by mu_4, since that would force x0 = 0
// while psi_3(0) = -A^2 != 0.
inline SpecialCheck no_mu4_fixed_level_three(const PrimeField& fp) {
    SpecialCheck c;
    c.id = "no_mu4_fixed_level3";
    c.description = "no Gamma0(3)-structure of y^2 = x^3 - x is fixed by mu_4";
    const auto lift = lift_to_closure(Curve<PrimeField>::from_ints(fp, -1, 0), 3);
    const auto& e = lift.curve;
    const auto& k = e.field();
    const auto structures = gamma0_structures(e, 3);
    const auto psi0 = PolyRing<ExtField>(k).eval(three_division_polynomial(e), k.zero());
    Json rows = Json::array();
    std::size_t exceptional = 0;
    for (const auto& g : structures) {
        auto row = structure_summary(e, g);
        if (row["stabilizer_order"] != 2) ++exceptional;
        rows.push_back(row);
    }
    c.details = Json{{"curve", curve_json(e, lift.relative_degree)},
                     {"psi3_at_zero", element_json(psi0)},
                     {"automorphism_group_order", automorphism_group(e).size()},
                     {"structures", rows}};
    c.passed = structures.size() == 4 && exceptional == 0 && !k.is_zero(psi0) && automorphism_group(e).size() == 4;
    return c;
}

}  // namespace detail

/// The four worked examples at j = 1728 and j = 0, each over the smallest
/// extension of F_p where the relevant torsion and roots of unity are rational.
inline SpecialPointsReport special_points(std::uint64_t p) {
    validate_prime(p);
    const PrimeField fp(p);
    SpecialPointsReport r;
    r.p = p;
    r.checks = {detail::mu4_on_level_two(fp), detail::mu6_three_cycle(fp), detail::mu6_fixed_level_three(fp),
                detail::no_mu4_fixed_level_three(fp)};
    return r;
}

inline Json to_json(const SpecialPointsReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"details", c.details}});
    return Json{{"command", "special-points"}, {"p", r.p}, {"checks", checks}, {"passed", r.passed()}};
}

inline std::string to_text(const SpecialPointsReport& r) {
    std::ostringstream out;
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.description << "\n";
        out << "    over " << c.details["curve"]["field"].get<std::string>() << "\n";
        for (const auto& s : c.details["structures"])
            out << "    " << s["structure"].dump() << " stabilizer " << s["stabilizer_order"] << "\n";
    }
    return out.str();
}

}  // namespace gamma0::cli

#endif  // GAMMA0_CLI_SPECIAL_POINTS_HPP_
