#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "pfj/config.hpp"

namespace pfj::cli {

// Valid --output selectors: partition, rho, kernel, janossy, gap.
extern const std::set<std::string> kComputeOutputs;

// Computes the requested quantities for the configured ensemble/interval
// and returns them as a JSON document (serialize with dump_deterministic).
nlohmann::json compute_document(const RunConfig& rc,
                                const std::set<std::string>& outputs);

}  // namespace pfj::cli
