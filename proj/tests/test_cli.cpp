#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "pfj/checks.hpp"
#include "pfj/compute.hpp"
#include "pfj/config.hpp"
#include "pfj/jsonio.hpp"

using nlohmann::json;
using pfj::cli::parse_config;

namespace {

json minimal_beta1() {
    return json::parse(R"({
        "ensemble": {"family": "beta1", "n": 1},
        "interval": [1],
        "space": {"points": [0.0, 0.5, 1.0, 2.0]}
    })");
}

json small_custom() {
    // Interval {1} keeps the complement {0, 2} pairing invertible; a
    // two-point interval here would leave a single-point complement whose
    // pairing matrix vanishes identically.
    return json::parse(R"({
        "ensemble": {
            "family": "custom",
            "n": 1,
            "phi": [[1.0, 1.0, 1.0], [0.0, 1.0, 2.0]],
            "epsilon": [[0.0, 0.5, 0.5], [-0.5, 0.0, 0.5], [-0.5, -0.5, 0.0]]
        },
        "interval": [1],
        "space": {"points": [0.0, 1.0, 2.0], "weights": [1.0, 1.0, 1.0]}
    })");
}

}  // namespace

TEST_CASE("minimal config parses with default weights") {
    const auto rc = parse_config(minimal_beta1());
    CHECK(rc.family == "beta1");
    CHECK(rc.spec.n == 1);
    CHECK(rc.spec.space.size() == 4);
    CHECK(rc.spec.space.weights == std::vector<double>(4, 1.0));
    CHECK(rc.interval == std::vector<int>{1});
    CHECK_FALSE(rc.doubled.has_value());
    CHECK(rc.warnings.empty());
}

TEST_CASE("unknown keys are rejected at every level") {
    json doc = minimal_beta1();
    doc["extra"] = 1;
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc["space"]["extra"] = 1;
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc["ensemble"]["xi"] = json::array();
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);
}

TEST_CASE("conflicting or missing sections are rejected") {
    json doc = minimal_beta1();
    doc["quadrature"] = {{"rule", "gauss-legendre"}, {"nodes", 4}};
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc.erase("space");
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc.erase("ensemble");
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc["ensemble"]["family"] = "beta3";
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc["ensemble"]["n"] = 0;
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc["interval"] = {9};
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);
}

TEST_CASE("weights and omega are mutually exclusive") {
    json doc = minimal_beta1();
    doc["space"]["weights"] = {1.0, 1.0, 1.0, 1.0};
    doc["ensemble"]["omega"] = {1.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = minimal_beta1();
    doc["ensemble"]["omega"] = {1.0, 2.0, 3.0, 4.0};
    const auto rc = parse_config(doc);
    CHECK(rc.spec.space.weights == std::vector<double>{1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("doubled families expand base intervals copy-consistently") {
    json doc = json::parse(R"({
        "ensemble": {"family": "beta2", "n": 1},
        "interval": [0, 2],
        "space": {"points": [0.0, 1.0, 2.0]}
    })");
    const auto rc = parse_config(doc);
    CHECK(rc.doubled.has_value());
    CHECK(rc.spec.space.size() == 6);
    CHECK(rc.interval == std::vector<int>{0, 1, 4, 5});
    CHECK(rc.doubled->copy_consistent(rc.interval));
}

TEST_CASE("custom ensembles demand explicit data") {
    CHECK_NOTHROW(parse_config(small_custom()));

    json doc = small_custom();
    doc["space"].erase("weights");
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = small_custom();
    doc["ensemble"]["epsilon"][0][1] = 0.25;  // breaks antisymmetry
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);

    doc = small_custom();
    doc["ensemble"]["phi"] = {{1.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(parse_config(doc), pfj::ConfigError);
}

TEST_CASE("quadrature configs build their space from the rule") {
    const json doc = json::parse(R"({
        "ensemble": {"family": "beta1", "n": 1,
                     "omega": {"family": "uniform", "a": -1.0, "b": 1.0}},
        "quadrature": {"rule": "gauss-legendre", "nodes": 6}
    })");
    const auto rc = parse_config(doc);
    CHECK(rc.spec.space.size() == 6);
    CHECK(rc.interval.empty());

    json bad = doc;
    bad["quadrature"]["rule"] = "simpson";
    CHECK_THROWS_AS(parse_config(bad), pfj::UnknownRuleError);

    bad = doc;
    bad["ensemble"]["omega"] = {1.0, 1.0};
    CHECK_THROWS_AS(parse_config(bad), pfj::ConfigError);
}

TEST_CASE("deterministic serialization sorts keys and keeps precision") {
    json doc;
    doc["zeta"] = 1.0 / 3.0;
    doc["alpha"] = {{"b", 2}, {"a", json::array({1.5, -0.25})}};
    doc["mid"] = "text";
    const std::string out = pfj::dump_deterministic(doc);
    CHECK(out.find("\"alpha\"") < out.find("\"mid\""));
    CHECK(out.find("\"mid\"") < out.find("\"zeta\""));
    CHECK(out.find("0.33333333333333331") != std::string::npos);
    // Round-trip preserves every double bit-exactly.
    CHECK(json::parse(out) == doc);
    // Integral doubles stay recognizably floating point.
    CHECK(pfj::dump_deterministic(json(2.0)).find("2.0") !=
          std::string::npos);
    // Repeated serialization is byte-stable.
    CHECK(pfj::dump_deterministic(doc) == out);
}

TEST_CASE("self-verification suite passes on a small instance") {
    const auto rc = parse_config(small_custom());
    const auto report = pfj::cli::run_checks(rc, 20260822ULL, 1.0);
    for (const auto& c : report.checks) {
        INFO(c.name << ": deviation " << c.deviation << " tolerance "
                    << c.tolerance << " note " << c.note);
        CHECK(c.pass);
    }
    CHECK(report.passed);
    CHECK(report.checks.size() == 6);

    const json j = report.to_json();
    CHECK(j["passed"] == true);
    CHECK(j["seed"] == 20260822ULL);
    CHECK(j["checks"].size() == 6);

    // Same seed, same bytes.
    const auto again = pfj::cli::run_checks(rc, 20260822ULL, 1.0);
    CHECK(pfj::dump_deterministic(again.to_json()) ==
          pfj::dump_deterministic(j));
}

TEST_CASE("compute documents carry the requested sections") {
    const auto rc = parse_config(small_custom());
    const json doc = pfj::cli::compute_document(
        rc, {"partition", "rho", "kernel", "janossy", "gap"});
    CHECK(doc.contains("ensemble"));
    CHECK(doc["partition"].contains("value"));
    CHECK(doc["rho"]["one_point"].size() == 3);
    CHECK(doc["rho"].contains("weighted_sum"));
    CHECK(doc["kernel"].contains("correlation"));
    CHECK(doc["kernel"].contains("max_deviation_on_interval"));
    CHECK(doc["janossy"].contains("constant"));
    CHECK(doc["gap"].contains("determinant_route"));
    // Weighted one-point mass equals the particle count.
    CHECK(doc["rho"]["weighted_sum"].get<double>() ==
          doctest::Approx(2.0).epsilon(1e-9));
    // Determinism: a second pass serializes to identical bytes.
    const json doc2 = pfj::cli::compute_document(
        rc, {"partition", "rho", "kernel", "janossy", "gap"});
    CHECK(pfj::dump_deterministic(doc) == pfj::dump_deterministic(doc2));

    const json partial = pfj::cli::compute_document(rc, {"partition"});
    CHECK(partial.contains("partition"));
    CHECK_FALSE(partial.contains("rho"));
}

TEST_CASE("degenerate intervals are marked singular, not fatal") {
    // Two points out of three leave a single-point complement; its pairing
    // matrix is identically zero, the gap probability vanishes, and both
    // interval-kernel routes must report the singularity gracefully.
    json doc = small_custom();
    doc["interval"] = {0, 1};
    const auto rc = parse_config(doc);
    const json out = pfj::cli::compute_document(rc, {"kernel", "janossy"});
    CHECK(out["kernel"]["janossy_direct"].contains("singular"));
    CHECK(out["kernel"]["janossy_resolvent"].contains("singular"));
    CHECK_FALSE(out["kernel"].contains("max_deviation_on_interval"));
    CHECK(out["janossy"].contains("singular"));
}
