// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_CLI_VERIFY_HPP_
#define GAMMA0_CLI_VERIFY_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "gamma0/cli/report.hpp"

namespace gamma0::cli {

struct VerifyReport {
    WeightGrading grading;
    bool self_test = false;
    std::vector<CheckResult> checks;

    std::size_t passed_count() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
    }

    /// Normal mode: every check passes. Self-test mode: the two algebraic checks
    /// pass and the three weight checks catch the injected grading.
    bool ok() const {
        if (!self_test) return passed_count() == checks.size();
        return checks.size() == 5 && checks[0].passed && checks[1].passed && !checks[2].passed && !checks[3].passed &&
               !checks[4].passed;
    }
};

/// The grading used by self-test mode: wt(x0) = 3 instead of 2.
inline WeightGrading self_test_grading() {
    WeightGrading g;
    g.weights[static_cast<std::size_t>(Var::X0)] = 3;
    return g;
}

inline VerifyReport verify_identities(bool self_test = false) {
    VerifyReport r;
    r.self_test = self_test;
    if (self_test) r.grading = self_test_grading();
    r.checks = run_identity_suite(r.grading);
    return r;
}

inline Json to_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    return Json{{"command", "verify-identities"},
                {"self_test", r.self_test},
                {"grading", grading_json(r.grading)},
                {"checks", checks},
                {"passed", r.passed_count()},
                {"total", r.checks.size()},
                {"ok", r.ok()}};
}

inline std::string to_text(const VerifyReport& r) {
    std::ostringstream out;
    if (r.self_test) out << "self-test: wt(x0) = 3\n";
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.description << "\n";
        out << "    lhs: " << c.lhs << "\n    rhs: " << c.rhs << "\n";
        for (const auto& d : c.diff) out << "    diff: " << d << "\n";
    }
    out << r.passed_count() << "/" << r.checks.size() << " checks pass";
    if (r.self_test) out << (r.ok() ? "; harness detected the wrong grading" : "; harness MISSED the wrong grading");
    out << "\n";
    return out.str();
}

}  // namespace gamma0::cli

#endif  // GAMMA0_CLI_VERIFY_HPP_
