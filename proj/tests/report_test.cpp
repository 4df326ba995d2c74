// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gamma0/cli.hpp"

using namespace gamma0;
using namespace gamma0::cli;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + GAMMA0_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(GAMMA0_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ScanConfig config(std::uint64_t p, int level, bool geometric, int k = 1) {
    ScanConfig cfg;
    cfg.p = p;
    cfg.k = k;
    cfg.level = level;
    cfg.geometric = geometric;
    return cfg;
}

}  // namespace

TEST(Golden, VerifyIdentities) {
    const auto r = run_cli("verify-identities --json");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("verify_identities.json"));
    EXPECT_EQ(dump(to_json(verify_identities())), golden("verify_identities.json"));
}

TEST(Golden, VerifyIdentitiesSelfTest) {
    const auto r = run_cli("verify-identities --json --self-test");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("verify_identities_self_test.json"));
}

TEST(Golden, Scans) {
    EXPECT_EQ(run_cli("scan --p 7 --level 3 --geometric").out, golden("scan_p7_level3_geometric.json"));
    EXPECT_EQ(run_cli("scan --p 7 --level 2 --format csv").out, golden("scan_p7_level2.csv"));
}

TEST(Verify, ReportListsEveryCheck) {
    const auto j = to_json(verify_identities());
    ASSERT_EQ(j["checks"].size(), 5u);
    EXPECT_EQ(j["passed"], 5);
    EXPECT_EQ(j["checks"][0]["lhs"], "g2^3 - 27*g2^2*x0^2 + 216*g2*x0^4 - 432*x0^6");
    const auto bad = to_json(verify_identities(true));
    EXPECT_EQ(bad["passed"], 2);
    EXPECT_FALSE(bad["checks"][3]["diff"].empty());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("verify-identities").status, 0);
    EXPECT_EQ(run_cli("lambda-order --level 2 --p 13").status, 0);
    EXPECT_EQ(run_cli("special-points --p 13").status, 0);
    EXPECT_EQ(run_cli("scan --p 13 --level 2 --geometric").status, 0);
    EXPECT_EQ(run_cli("scan --p 4 --level 2").status, 2);
    EXPECT_EQ(run_cli("scan --p 9 --level 2").status, 2);
    EXPECT_EQ(run_cli("scan --p 3 --level 2").status, 2);
    EXPECT_EQ(run_cli("scan --p 13 --level 5").status, 2);
    EXPECT_EQ(run_cli("scan --p 13 --level 2 --k 0").status, 2);
    EXPECT_EQ(run_cli("scan --p 13 --level 2 --format xml").status, 2);
    EXPECT_EQ(run_cli("scan --level 2").status, 2);
    EXPECT_EQ(run_cli("lambda-order --level 4 --p 13").status, 2);
    EXPECT_EQ(run_cli("special-points --p 2").status, 2);
    EXPECT_EQ(run_cli("no-such-command").status, 2);
    EXPECT_EQ(run_cli("").status, 2);
}

TEST(Cli, EnumerationCapFromEnvironment) {
    EXPECT_EQ(run_cli("scan --p 101 --level 2", "GAMMA0_MAX_FIELD=100").status, 2);
    EXPECT_EQ(run_cli("scan --p 5 --k 3 --level 2", "GAMMA0_MAX_FIELD=100").status, 2);
    EXPECT_EQ(run_cli("scan --p 97 --level 2", "GAMMA0_MAX_FIELD=100").status, 0);
}

TEST(Cli, OutFileMatchesStdout) {
    const std::string path = testing::TempDir() + "gamma0_scan.csv";
    EXPECT_EQ(run_cli("scan --p 11 --level 3 --format csv --out " + path).status, 0);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    EXPECT_EQ(s.str(), run_cli("scan --p 11 --level 3 --format csv").out);
    EXPECT_EQ(run_cli("scan --p 11 --level 3 --out /nonexistent-dir/x.json").status, 2);
}

TEST(Cli, LambdaOrderJson) {
    const auto r2 = run_cli("lambda-order --level 2 --p 13 --json");
    ASSERT_EQ(r2.status, 0);
    const auto j2 = Json::parse(r2.out);
    EXPECT_EQ(j2["order"], 4);
    EXPECT_EQ(j2["divisor_certificate"]["bound"], 4);
    EXPECT_EQ(j2["multiple_certificate"]["character_order"], 4);
    const auto j3 = Json::parse(run_cli("lambda-order --level 3 --p 7 --json").out);
    EXPECT_EQ(j3["order"], 6);
    EXPECT_EQ(j3["multiple_certificate"]["stabilizer_order"], 6);
}

TEST(Scan, ValidatesConfig) {
    EXPECT_THROW(scan(config(4, 2, false)), ConfigInvalid);
    EXPECT_THROW(scan(config(3, 2, false)), ConfigInvalid);
    EXPECT_THROW(scan(config(13, 4, false)), ConfigInvalid);
    EXPECT_THROW(scan(config(13, 2, false, 0)), ConfigInvalid);
    EXPECT_THROW(scan(config(1009, 2, false, 2)), ConfigInvalid);
}

TEST(Scan, LevelTwoOverF13) {
    const auto rep = scan(config(13, 2, true));
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.curves, 13u * 13u - 13u);  // 4A^3 + 27B^2 = 0 has 13 solutions here
    std::size_t total = 0;
    for (const auto& [order, count] : rep.stabilizer_histogram) {
        EXPECT_TRUE(order == 2 || order == 4);
        total += count;
    }
    EXPECT_EQ(total, rep.pairs.size());
    EXPECT_EQ(rep.pairs.size(), 3 * rep.curves);
    // order-4 pairs are exactly B = 0 with G = <(0, 0)>
    const ExtField& f = rep.field;
    for (const auto& r : rep.pairs) {
        const bool expect = f.is_zero(r.b) && f.is_zero(r.structure.generator().x);
        EXPECT_EQ(r.stabilizer_order == 4, expect);
        if (r.exceptional) {
            EXPECT_TRUE(r.witness.has_value());
            EXPECT_EQ(r.j, f.from_int(1728));
        }
    }
    EXPECT_EQ(rep.exceptional_count(), 12u);
    EXPECT_EQ(rep.lambda.verdict, "exact");
}

TEST(Scan, LevelThreeOrderSixOnlyAtJZero) {
    for (std::uint64_t p : {7u, 13u}) {
        const auto rep = scan(config(p, 3, true));
        EXPECT_TRUE(rep.passed()) << p;
        EXPECT_EQ(rep.pairs.size(), 4 * rep.curves);
        EXPECT_GT(rep.exceptional_count(), 0u);
        for (const auto& r : rep.pairs) {
            EXPECT_TRUE(r.stabilizer_order == 2 || r.stabilizer_order == 6);
            if (r.stabilizer_order == 6) {
                EXPECT_TRUE(rep.field.is_zero(r.a));
                EXPECT_TRUE(r.witness.has_value());
            }
        }
        // one order-6 pair per j = 0 curve (A = 0, B != 0)
        EXPECT_EQ(rep.exceptional_count(), p - 1);
    }
}

TEST(Scan, RationalMuFourDependsOnP) {
    // 2^2 = -1 in F_5, so mu_4 is rational and order-4 stabilizers occur without extending
    const PrimeField f5(5);
    EXPECT_EQ(f5.mul(f5.from_int(2), f5.from_int(2)), f5.from_int(-1));
    const auto r5 = scan(config(5, 2, false));
    EXPECT_TRUE(r5.warnings.empty());
    EXPECT_GT(r5.stabilizer_histogram.count(4), 0u);

    // 7 = 3 mod 4: every rational stabilizer is {+-1}; the closure restores the order-4 locus
    const auto r7 = scan(config(7, 2, false));
    ASSERT_EQ(r7.stabilizer_histogram.size(), 1u);
    EXPECT_EQ(r7.stabilizer_histogram.begin()->first, 2u);
    EXPECT_EQ(r7.warnings.size(), 1u);
    EXPECT_EQ(r7.lambda.verdict, "lower bound only");
    EXPECT_TRUE(r7.passed());
    const auto g7 = scan(config(7, 2, true));
    EXPECT_EQ(g7.stabilizer_histogram.at(4), 6u);
}

TEST(Scan, ExtensionFieldScan) {
    const auto rep = scan(config(5, 2, true, 2));
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.pairs.size(), 3 * rep.curves);
    EXPECT_EQ(rep.exceptional_count(), 24u);  // B = 0, A != 0
}

TEST(Scan, CsvIsFlatProjection) {
    const auto rep = scan(config(13, 3, true));
    const auto csv = to_csv(rep);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rep.pairs.size() + 1);
    const auto j = to_json(rep);
    EXPECT_EQ(j["pairs"], rep.pairs.size());
    EXPECT_EQ(j["exceptional_pairs"].size(), rep.exceptional_count());
}

TEST(SpecialPoints, BothPrimes) {
    for (std::uint64_t p : {7u, 13u}) {
        const auto r = special_points(p);
        ASSERT_EQ(r.checks.size(), 4u);
        for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << p << " " << c.id;
    }
    // over F_13 the order-4 unit i = 5 or 8 swaps <(1,0)> and <(12,0)>
    const auto j = to_json(special_points(13))["checks"][0]["details"];
    EXPECT_EQ(j["curve"]["closure_degree"], 1);
    EXPECT_EQ(j["structures"][1]["image_under_i"], j["structures"][2]["structure"]);
    EXPECT_THROW(special_points(9), ConfigInvalid);
}

TEST(LambdaOrder, Values) {
    EXPECT_EQ(lambda_order(2, 13).order, 4u);
    EXPECT_EQ(lambda_order(3, 7).order, 6u);
    EXPECT_EQ(lambda_order(3, 13).order, 6u);
    EXPECT_EQ(lambda_order(2, 5).order, 4u);
    EXPECT_THROW(lambda_order(4, 13), ConfigInvalid);
}

TEST(Properties, ReportsAreDeterministic) {
    const std::array<ScanConfig, 8> configs{config(5, 2, false), config(5, 3, false), config(5, 2, true), config(5, 3, true),
                                            config(7, 2, false), config(7, 3, false), config(7, 2, true), config(11, 3, false)};
    std::array<std::string, 8> first;
    for (std::size_t i = 0; i < configs.size(); ++i) first[i] = dump(to_json(scan(configs[i]))) + to_csv(scan(configs[i]));
    std::size_t cases = 0;
    for (int round = 0; round < 125; ++round)
        for (std::size_t i = 0; i < configs.size(); ++i) {
            const auto rep = scan(configs[i]);
            ASSERT_EQ(dump(to_json(rep)) + to_csv(rep), first[i]) << round << " " << i;
            ++cases;
        }
    EXPECT_GE(cases, 1000u);
    const auto a = run_cli("scan --p 13 --level 3 --geometric");
    const auto b = run_cli("scan --p 13 --level 3 --geometric");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run_cli("special-points --p 7 --json").out, run_cli("special-points --p 7 --json").out);
}
