#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfj/config.hpp"

namespace pfj::cli {

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct CheckReport {
    std::vector<CheckResult> checks;
    bool passed = false;
    std::uint64_t seed = 0;
    double tol_scale = 1.0;

    nlohmann::json to_json() const;
};

// Self-verification suite for a configured ensemble, in order:
// Pfaffian algebra properties on seeded random matrices, density
// normalization, correlation functions against brute force, the
// direct-vs-resolvent interval-kernel equality over every small interval
// (or a seeded sample on larger spaces), gap-probability triple agreement,
// and the block-resolvent identity on seeded random triples.
// Exhaustive parts that would exceed the enumeration budget are recorded
// as skipped with a note rather than run.
CheckReport run_checks(const RunConfig& rc, std::uint64_t seed,
                       double tol_scale);

}  // namespace pfj::cli
