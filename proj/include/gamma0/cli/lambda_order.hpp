// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_CLI_LAMBDA_ORDER_HPP_
#define GAMMA0_CLI_LAMBDA_ORDER_HPP_

#include <sstream>
#include <string>

#include "gamma0/cli/scan.hpp"
#include "gamma0/cli/special_points.hpp"

namespace gamma0::cli {

/// Order of the Hodge class at level N, pinned between two certificates:
/// the weight-0 section coefficient * omega^k shows the order divides k, and the
/// stabilizer character at the special pair shows it is a multiple of the character order.
struct LambdaOrderReport {
    int level = 0;
    std::uint64_t p = 0;
    CheckResult divisor_certificate;
    int divisor_bound = 0;
    std::string field;
    int closure_degree = 0;
    Gamma0Structure<ExtField> structure;
    std::size_t stabilizer_order = 0;
    std::uint64_t character_order = 0;
    std::uint64_t order = 0;
};

/// Throws CertificateMismatch when the two bounds do not coincide.
inline LambdaOrderReport lambda_order(int level, std::uint64_t p) {
    validate_prime(p);
    if (level != 2 && level != 3) throw ConfigInvalid("level must be 2 or 3, got " + std::to_string(level));
    LambdaOrderReport r;
    r.level = level;
    r.p = p;
    r.divisor_certificate = check_trivialization_weight(level);
    r.divisor_bound = section_power(level);

    const PrimeField fp(p);
    const auto [curve, g] = special_pair(fp, level);
    const auto lift = lift_to_closure(curve, level);
    r.closure_degree = lift.relative_degree;
    r.field = lift.curve.field().describe();
    r.structure = base_change_structure(curve, lift.embed, g);
    const auto stab = stabilizer(lift.curve, r.structure);
    r.stabilizer_order = stab.size();
    r.character_order = character_of_stabilizer(lift.curve.field(), stab);

    if (!r.divisor_certificate.passed)
        throw CertificateMismatch("section " + r.divisor_certificate.description + " failed: weight " +
                                  r.divisor_certificate.lhs);
    if (r.character_order != static_cast<std::uint64_t>(r.divisor_bound))
        throw CertificateMismatch("character order " + std::to_string(r.character_order) + " at the special pair over " +
                                  r.field + " does not match the weight bound " + std::to_string(r.divisor_bound));
    r.order = r.character_order;
    return r;
}

inline Json to_json(const LambdaOrderReport& r) {
    return Json{{"command", "lambda-order"},
                {"level", r.level},
                {"p", r.p},
                {"order", r.order},
                {"divisor_certificate", Json{{"check", check_json(r.divisor_certificate)}, {"bound", r.divisor_bound}}},
                {"multiple_certificate", Json{{"field", r.field},
                                              {"closure_degree", r.closure_degree},
                                              {"structure", structure_json(r.structure)},
                                              {"stabilizer_order", r.stabilizer_order},
                                              {"character_order", r.character_order}}}};
}

inline std::string to_text(const LambdaOrderReport& r) {
    std::ostringstream out;
    out << "lambda has order " << r.order << " at level " << r.level << "\n";
    out << "  divides " << r.divisor_bound << ": " << r.divisor_certificate.description << " (weight "
        << r.divisor_certificate.lhs << ")\n";
    out << "  multiple of " << r.character_order << ": stabilizer of order " << r.stabilizer_order
        << " at the special pair over " << r.field << "\n";
    return out.str();
}

}  // namespace gamma0::cli

#endif  // GAMMA0_CLI_LAMBDA_ORDER_HPP_
