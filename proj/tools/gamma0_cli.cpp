// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "gamma0/cli.hpp"

using namespace gamma0;
using namespace gamma0::cli;

namespace {

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitConfig;
    }
    out << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Gamma0(2) and Gamma0(3) level structures over finite fields"};
    app.require_subcommand(1);

    bool verify_json = false, self_test = false;
    auto* verify = app.add_subcommand("verify-identities", "Check the discriminant and trivialization identities");
    verify->add_flag("--json", verify_json, "Print the JSON report");
    verify->add_flag("--self-test", self_test, "Run with wt(x0) = 3 and require the weight checks to fail");

    ScanConfig cfg;
    std::string format = "json", out_path;
    auto* scan_cmd = app.add_subcommand("scan", "Scan every curve and level structure over F_{p^k}");
    scan_cmd->add_option("--p", cfg.p, "Prime characteristic (>= 5)")->required();
    scan_cmd->add_option("--k", cfg.k, "Extension degree")->capture_default_str();
    scan_cmd->add_option("--level", cfg.level, "Level N (2 or 3)")->required();
    scan_cmd->add_flag("--geometric", cfg.geometric, "Extend each curve until its N-torsion and automorphisms are rational");
    scan_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    scan_cmd->add_option("--out", out_path, "Write the report to FILE instead of stdout");

    std::uint64_t special_p = 0;
    bool special_json = false;
    auto* special = app.add_subcommand("special-points", "Reproduce the j = 0 and j = 1728 worked examples");
    special->add_option("--p", special_p, "Prime characteristic (>= 5)")->required();
    special->add_flag("--json", special_json, "Print the JSON report");

    int lambda_level = 0;
    std::uint64_t lambda_p = 0;
    bool lambda_json = false;
    auto* lambda = app.add_subcommand("lambda-order", "Certify the order of the Hodge class at level N");
    lambda->add_option("--level", lambda_level, "Level N (2 or 3)")->required();
    lambda->add_option("--p", lambda_p, "Prime characteristic (>= 5)")->required();
    lambda->add_flag("--json", lambda_json, "Print the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*verify) {
            const auto r = verify_identities(self_test);
            std::cout << (verify_json ? dump(to_json(r)) : to_text(r));
            return r.ok() ? kExitOk : kExitViolation;
        }
        if (*scan_cmd) {
            cfg.format = format == "csv" ? Format::Csv : Format::Json;
            const auto r = scan(cfg);
            const int status = emit(cfg.format == Format::Csv ? to_csv(r) : dump(to_json(r)), out_path);
            if (status != kExitOk) return status;
            for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
            for (const auto& v : r.violations) std::cerr << "violation: " << v << "\n";
            return r.passed() ? kExitOk : kExitViolation;
        }
        if (*special) {
            const auto r = special_points(special_p);
            std::cout << (special_json ? dump(to_json(r)) : to_text(r));
            return r.passed() ? kExitOk : kExitViolation;
        }
        if (*lambda) {
            const auto r = lambda_order(lambda_level, lambda_p);
            std::cout << (lambda_json ? dump(to_json(r)) : to_text(r));
            return kExitOk;
        }
    } catch (const ConfigInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const CertificateMismatch& e) {
        std::cerr << "certificate mismatch: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitConfig;
}
