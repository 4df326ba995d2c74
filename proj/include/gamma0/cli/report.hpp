// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_CLI_REPORT_HPP_
#define GAMMA0_CLI_REPORT_HPP_

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gamma0/ellcurve.hpp"
#include "gamma0/symcheck.hpp"

namespace gamma0::cli {

using Json = nlohmann::ordered_json;

/// Process exit statuses shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitConfig = 2 };

/// Field elements are written as their coefficient vectors, lowest degree first.
template <FiniteField F>
Json element_json(const F& f, const typename F::Element& a) {
    return f.coefficients(a);
}

template <FiniteField F>
Json point_json(const F& f, const Point<F>& p) {
    if (p.infinity) return "infinity";
    return Json::array({element_json(f, p.x), element_json(f, p.y)});
}

template <FiniteField F>
Json structure_json(const F& f, const Gamma0Structure<F>& g) {
    Json points = Json::array();
    for (const auto& p : g.points) points.push_back(point_json(f, p));
    return points;
}

inline Json element_json(const ExtField::Element& a) { return std::vector<std::int64_t>(a.c.begin(), a.c.end()); }

inline std::string element_csv(const ExtField::Element& a) {
    std::string s;
    for (auto c : a.c) s += (s.empty() ? "" : " ") + std::to_string(c);
    return s;
}

inline Json point_json(const Point<ExtField>& p) {
    if (p.infinity) return "infinity";
    return Json::array({element_json(p.x), element_json(p.y)});
}

inline Json structure_json(const Gamma0Structure<ExtField>& g) {
    Json points = Json::array();
    for (const auto& p : g.points) points.push_back(point_json(p));
    return points;
}

inline Json field_json(const ExtField& f) {
    return Json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}, {"description", f.describe()}};
}

/// Space-separated coefficients, the CSV form of a field element.
template <FiniteField F>
std::string element_csv(const F& f, const typename F::Element& a) {
    std::string s;
    for (auto c : f.coefficients(a)) s += (s.empty() ? "" : " ") + std::to_string(c);
    return s;
}

inline Json check_json(const CheckResult& r) {
    return Json{{"id", r.id},   {"description", r.description}, {"passed", r.passed},
                {"lhs", r.lhs}, {"rhs", r.rhs},                 {"diff", r.diff}};
}

inline Json grading_json(const WeightGrading& g) {
    Json out;
    for (std::size_t i = 0; i < kNumVars; ++i) out[kVarNames[i]] = g.weights[i];
    out["omega"] = g.omega;
    return out;
}

/// Two-space indented JSON with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gamma0::cli

#endif  // GAMMA0_CLI_REPORT_HPP_
