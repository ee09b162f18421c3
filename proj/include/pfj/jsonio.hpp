#pragma once

#include <string>

#include <json.hpp>

namespace pfj {

// Deterministic serialization: keys in sorted order (nlohmann's default
// object ordering), floating-point numbers with 17 significant digits, so
// identical documents produce identical bytes across runs.
std::string dump_deterministic(const nlohmann::json& j, int indent = 2);

}  // namespace pfj
