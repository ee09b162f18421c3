#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfj/classical.hpp"
#include "pfj/ensemble.hpp"

namespace pfj::cli {

// A fully resolved run: the ensemble to analyze plus the interval of
// interest (indices into the ensemble's space; for doubled families the
// config lists base indices and they are expanded copy-consistently).
struct RunConfig {
    std::string family;  // beta1 | beta2 | beta4 | biorthogonal | custom
    EnsembleSpec spec;
    std::vector<int> interval;
    std::optional<DoubledSpace> doubled;
    std::vector<std::string> warnings;
};

// Parses and validates a JSON config document. Unknown keys anywhere in
// the document are rejected. Throws ConfigError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

}  // namespace pfj::cli
