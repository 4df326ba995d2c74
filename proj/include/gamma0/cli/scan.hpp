// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_CLI_SCAN_HPP_
#define GAMMA0_CLI_SCAN_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gamma0/cli/report.hpp"

namespace gamma0::cli {

enum class Format { Json, Csv };

struct ScanConfig {
    std::uint64_t p = 0;
    int k = 1;
    int level = 2;
    bool geometric = false;
    Format format = Format::Json;
};

/// Throws ConfigInvalid unless p is a prime >= 5, k >= 1, N is 2 or 3 and p^k is within the cap.
inline void validate(const ScanConfig& cfg) {
    if (cfg.p < 5 || !is_prime(cfg.p)) throw ConfigInvalid("p must be a prime >= 5, got " + std::to_string(cfg.p));
    if (cfg.k < 1 || cfg.k > ExtField::kMaxDegree)
        throw ConfigInvalid("k must lie in [1, " + std::to_string(ExtField::kMaxDegree) + "], got " + std::to_string(cfg.k));
    if (cfg.level != 2 && cfg.level != 3) throw ConfigInvalid("level must be 2 or 3, got " + std::to_string(cfg.level));
    const BigInt q = boost::multiprecision::pow(BigInt(cfg.p), static_cast<unsigned>(cfg.k));
    if (q > enumeration_cap())
        throw ConfigInvalid("field of order " + q.str() + " exceeds the enumeration cap " +
                            std::to_string(enumeration_cap()) + " (set GAMMA0_MAX_FIELD to raise it)");
}

/// The designated pair with the largest stabilizer: (y^2 = x^3 - x, <(0,0)>) for N = 2
/// and (y^2 = x^3 + 1, {infinity, (0, 1), (0, -1)}) for N = 3.
template <FiniteField F>
std::pair<Curve<F>, Gamma0Structure<F>> special_pair(const F& f, int level) {
    check_level(level);
    if (level == 2) return {Curve<F>::from_ints(f, -1, 0), {2, {Point<F>::at_infinity(), Point<F>::affine(f.zero(), f.zero())}}};
    Gamma0Structure<F> g{3, {Point<F>::at_infinity(), Point<F>::affine(f.zero(), f.one()),
                             Point<F>::affine(f.zero(), f.neg(f.one()))}};
    std::sort(g.points.begin(), g.points.end());
    return {Curve<F>::from_ints(f, 0, 1), g};
}

/// Stabilizer orders that may occur: {2, 4} for N = 2 and {2, 6} for N = 3.
inline std::vector<std::size_t> allowed_stabilizer_orders(int level) {
    return level == 2 ? std::vector<std::size_t>{2, 4} : std::vector<std::size_t>{2, 6};
}

/// Power of omega in the canonical section: omega^4 for N = 2, omega^6 for N = 3.
inline int section_power(int level) {
    check_level(level);
    return level == 2 ? 4 : 6;
}

/// One (E, G) pair of a scan. A, B and j live in the scanned field; the structure,
/// and the witness when present, in the extension of degree closure_degree.
struct PairRecord {
    std::size_t curve_index = 0;
    ExtField::Element a, b, j;
    int closure_degree = 1;
    std::string field;
    Gamma0Structure<ExtField> structure;
    std::size_t stabilizer_order = 0;
    std::uint64_t character_order = 0;
    bool exceptional = false;
    std::optional<GeometricWitness> witness;
};

struct LambdaVerdict {
    int weight_bound = 0;
    std::uint64_t max_character_order = 0;
    std::string verdict;
};

struct ScanReport {
    ScanConfig config;
    ExtField field{5, 1};
    std::size_t curves = 0;
    std::map<std::size_t, std::size_t> structure_counts;
    std::map<std::size_t, std::size_t> stabilizer_histogram;
    std::vector<PairRecord> pairs;
    LambdaVerdict lambda;
    std::vector<std::string> warnings;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    std::size_t exceptional_count() const {
        return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& r) { return r.exceptional; }));
    }
};

namespace detail {

inline std::string pair_label(const PairRecord& r) {
    std::string s = "curve A=" + element_csv(r.a) + " B=" + element_csv(r.b) + " structure {";
    const auto& k = r.structure.points;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ", ";
        s += k[i].infinity ? "inf" : "(" + element_csv(k[i].x) + " | " + element_csv(k[i].y) + ")";
    }
    return s + "}";
}

// Checks the shape of one pair whose stabilizer is larger than {+-1}.
inline void check_exceptional(const Curve<ExtField>& e, const PairRecord& r, int level, std::vector<std::string>& out,
                              const std::string& label) {
    const auto& f = e.field();
    const auto stab = stabilizer(e, r.structure);
    if (r.stabilizer_order == 4) {
        if (level != 2 || !e.j_is_1728()) out.push_back(label + ": order-4 stabilizer away from j = 1728 at level 2");
        bool fixed = false;
        for (const auto& aut : stab)
            if (multiplicative_order(f, aut.u, 4) == 4u && apply_aut(e, aut, r.structure.generator()) == r.structure.generator())
                fixed = true;
        if (!fixed) out.push_back(label + ": generator is not fixed by an order-4 automorphism");
    }
    if (r.stabilizer_order == 6) {
        if (level != 3 || !e.j_is_zero()) out.push_back(label + ": order-6 stabilizer away from j = 0 at level 3");
        if (!f.is_zero(r.structure.generator().x)) out.push_back(label + ": order-6 structure is not {inf, (0, +-y0)}");
    }
    if (!r.witness) out.push_back(label + ": no isomorphism to the special pair");
}

}  // namespace detail

/// Every nonsingular (A, B) over F_{p^k} in enumeration order, with all
/// Gamma0(N)-structures over F_{p^k} (or over the geometric closure when
/// cfg.geometric is set), their stabilizers and stabilizer characters.
inline ScanReport scan(const ScanConfig& cfg) {
    validate(cfg);
    ScanReport rep;
    rep.config = cfg;
    rep.field = ExtField(cfg.p, cfg.k);
    const ExtField& f = rep.field;
    const int level = cfg.level;
    const auto allowed = allowed_stabilizer_orders(level);

    const auto weight_check = check_trivialization_weight(level);
    rep.lambda.weight_bound = section_power(level);
    if (!weight_check.passed) rep.violations.push_back("trivialization weight check failed: " + weight_check.lhs);

    if (!cfg.geometric) {
        const std::uint64_t mu = level == 2 ? 4 : 6;
        if (!contains_roots_of_unity(f, mu))
            rep.warnings.push_back("mu_" + std::to_string(mu) + " is not contained in " + f.describe() +
                                   "; stabilizers of order " + std::to_string(mu) + " cannot appear without --geometric");
    }

    ExtensionTower tower(f);
    std::map<int, std::pair<Curve<ExtField>, Gamma0Structure<ExtField>>> specials;
    const auto elements = f.elements();
    for (const auto& a : elements) {
        for (const auto& b : elements) {
            if (f.is_zero(f.add(f.mul(f.from_int(4), f.mul(f.mul(a, a), a)), f.mul(f.from_int(27), f.mul(b, b)))))
                continue;
            const Curve<ExtField> base(f, a, b);
            const std::size_t index = rep.curves++;
            const int d = cfg.geometric ? geometric_closure_degree(base, level, tower) : 1;
            const auto& embed = tower.embedding(d);
            const auto e = base.base_change(embed);
            const auto& k = e.field();
            auto sp = specials.find(d);
            if (sp == specials.end()) sp = specials.emplace(d, special_pair(k, level)).first;

            const auto structures = gamma0_structures(e, level);
            ++rep.structure_counts[structures.size()];
            for (const auto& g : structures) {
                PairRecord r;
                r.curve_index = index;
                r.a = a;
                r.b = b;
                r.j = base.j_invariant();
                r.closure_degree = d;
                r.field = k.describe();
                r.structure = g;
                const auto stab = stabilizer(e, g);
                r.stabilizer_order = stab.size();
                r.character_order = character_of_stabilizer(k, stab);
                r.exceptional = r.stabilizer_order > 2;
                ++rep.stabilizer_histogram[r.stabilizer_order];
                rep.lambda.max_character_order = std::max(rep.lambda.max_character_order, r.character_order);
                const std::string label = detail::pair_label(r);

                if (std::find(allowed.begin(), allowed.end(), r.stabilizer_order) == allowed.end())
                    rep.violations.push_back(label + ": stabilizer order " + std::to_string(r.stabilizer_order) +
                                             " outside the allowed set");
                if (r.character_order != r.stabilizer_order)
                    rep.violations.push_back(label + ": character order differs from stabilizer order");
                if (r.exceptional) {
                    r.witness = geometric_isomorphism(sp->second.first, sp->second.second, e, g);
                    detail::check_exceptional(e, r, level, rep.violations, label);
                }
                // in the closure, the x = 0 structure of a j = 1728 (N = 2) or j = 0 (N = 3) curve is special
                const bool expect_special = cfg.geometric && !g.generator().infinity && k.is_zero(g.generator().x) &&
                                            (level == 2 ? e.j_is_1728() : e.j_is_zero());
                if (expect_special && r.stabilizer_order != static_cast<std::size_t>(section_power(level)))
                    rep.violations.push_back(label + ": expected stabilizer of order " +
                                             std::to_string(section_power(level)));
                rep.pairs.push_back(std::move(r));
            }
        }
    }

    auto& lam = rep.lambda;
    if (lam.max_character_order == static_cast<std::uint64_t>(lam.weight_bound)) {
        lam.verdict = "exact";
    } else if (lam.max_character_order != 0 && lam.weight_bound % lam.max_character_order == 0) {
        lam.verdict = "lower bound only";
    } else {
        lam.verdict = "violation";
        rep.violations.push_back("character order " + std::to_string(lam.max_character_order) +
                                 " does not divide the weight bound " + std::to_string(lam.weight_bound));
    }
    return rep;
}

inline Json to_json(const ScanReport& rep) {
    const ExtField& f = rep.field;
    Json counts = Json::object(), hist = Json::object(), exceptional = Json::array();
    for (const auto& [n, c] : rep.structure_counts) counts[std::to_string(n)] = c;
    for (const auto& [n, c] : rep.stabilizer_histogram) hist[std::to_string(n)] = c;
    for (const auto& r : rep.pairs) {
        if (!r.exceptional) continue;
        Json witness = nullptr;
        if (r.witness)
            witness = Json{{"u", element_json(r.witness->u)},
                           {"relative_degree", r.witness->relative_degree},
                           {"field", r.witness->field.describe()}};
        exceptional.push_back(Json{{"curve_index", r.curve_index},
                                   {"a", element_json(f, r.a)},
                                   {"b", element_json(f, r.b)},
                                   {"j", element_json(f, r.j)},
                                   {"closure_degree", r.closure_degree},
                                   {"field", r.field},
                                   {"structure", structure_json(r.structure)},
                                   {"stabilizer_order", r.stabilizer_order},
                                   {"character_order", r.character_order},
                                   {"witness", witness}});
    }
    return Json{{"command", "scan"},
                {"field", field_json(f)},
                {"level", rep.config.level},
                {"geometric", rep.config.geometric},
                {"curves", rep.curves},
                {"pairs", rep.pairs.size()},
                {"structure_counts", counts},
                {"stabilizer_histogram", hist},
                {"exceptional_pairs", exceptional},
                {"lambda", Json{{"weight_bound", rep.lambda.weight_bound},
                                {"max_character_order", rep.lambda.max_character_order},
                                {"verdict", rep.lambda.verdict}}},
                {"warnings", rep.warnings},
                {"violations", rep.violations},
                {"passed", rep.passed()}};
}

/// One row per (E, G) pair. Field elements are space-separated coefficient vectors.
inline std::string to_csv(const ScanReport& rep) {
    const ExtField& f = rep.field;
    std::ostringstream out;
    out << "curve_index,a,b,j,closure_degree,generator_x,generator_y,stabilizer_order,character_order,exceptional,"
           "witness_u,witness_degree\n";
    for (const auto& r : rep.pairs) {
        const auto& g = r.structure.generator();
        out << r.curve_index << ',' << element_csv(f, r.a) << ',' << element_csv(f, r.b) << ',' << element_csv(f, r.j)
            << ',' << r.closure_degree << ',' << element_csv(g.x) << ',' << element_csv(g.y) << ','
            << r.stabilizer_order << ',' << r.character_order << ',' << (r.exceptional ? 1 : 0) << ',';
        if (r.witness) out << element_csv(r.witness->u) << ',' << r.witness->relative_degree;
        else out << ',';
        out << '\n';
    }
    return out.str();
}

}  // namespace gamma0::cli

#endif  // GAMMA0_CLI_SCAN_HPP_
