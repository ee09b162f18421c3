#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfj/checks.hpp"
#include "pfj/compute.hpp"
#include "pfj/config.hpp"
#include "pfj/jsonio.hpp"

namespace {

int run_check(const std::string& config_path, std::uint64_t seed,
              double tol_scale, bool as_json) {
    const pfj::cli::RunConfig rc = pfj::cli::load_config(config_path);
    for (const std::string& w : rc.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    const pfj::cli::CheckReport report =
        pfj::cli::run_checks(rc, seed, tol_scale);
    if (as_json) {
        std::cout << pfj::dump_deterministic(report.to_json());
    } else {
        std::printf("seed %llu  tol-scale %g\n",
                    static_cast<unsigned long long>(report.seed),
                    report.tol_scale);
        for (const auto& c : report.checks) {
            std::printf("[%s] %-26s deviation %.3e  tolerance %.3e  %s\n",
                        c.pass ? "PASS" : "FAIL", c.name.c_str(), c.deviation,
                        c.tolerance, c.note.c_str());
        }
        std::printf("%s\n", report.passed ? "all checks passed"
                                          : "CHECK FAILURES PRESENT");
    }
    return report.passed ? 0 : 1;
}

int run_compute(const std::string& config_path, const std::string& out_path,
                const std::vector<std::string>& outputs,
                const std::vector<int>& interval_override,
                bool have_interval) {
    pfj::cli::RunConfig rc = pfj::cli::load_config(config_path);
    for (const std::string& w : rc.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    if (have_interval) {
        rc.interval = rc.doubled
                          ? rc.doubled->interval(interval_override)
                          : pfj::normalize_interval(interval_override,
                                                    rc.spec.space.size());
    }
    std::set<std::string> selected(outputs.begin(), outputs.end());
    if (selected.empty()) selected = pfj::cli::kComputeOutputs;
    const nlohmann::json doc = pfj::cli::compute_document(rc, selected);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw pfj::ConfigError("cannot open output file '" + out_path + "'");
    }
    out << pfj::dump_deterministic(doc);
    if (!out) {
        throw pfj::ConfigError("cannot write output file '" + out_path + "'");
    }
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pfaffian point-process toolkit: densities, correlation "
                 "functions, Janossy kernels, and gap probabilities of "
                 "finite ensembles"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 20260822ULL;
    double tol_scale = 1.0;
    bool as_json = false;
    CLI::App* check = app.add_subcommand(
        "check", "run the self-verification suite on a configured ensemble");
    check->add_option("--config", config_path, "JSON config file")
        ->required();
    check->add_option("--seed", seed, "seed for the randomized checks");
    check->add_option("--tol", tol_scale,
                      "scale factor applied to every check tolerance");
    check->add_flag("--json", as_json, "emit the report as JSON");

    std::string compute_config, out_path;
    std::vector<std::string> outputs;
    std::vector<int> interval_override;
    CLI::App* compute = app.add_subcommand(
        "compute", "compute ensemble quantities into a JSON document");
    compute->add_option("--config", compute_config, "JSON config file")
        ->required();
    compute->add_option("--out", out_path, "output JSON file")->required();
    compute
        ->add_option("--output", outputs,
                     "quantities to compute (default: all)")
        ->check(CLI::IsMember(pfj::cli::kComputeOutputs));
    CLI::Option* interval_opt =
        compute
            ->add_option("--interval", interval_override,
                         "interval indices overriding the config (base "
                         "indices for doubled families)")
            ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            return run_check(config_path, seed, tol_scale, as_json);
        }
        return run_compute(compute_config, out_path, outputs,
                           interval_override,
                           interval_opt->count() > 0);
    } catch (const pfj::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const pfj::UnknownRuleError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const pfj::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
