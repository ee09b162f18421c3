#include "pfj/config.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <string>

#include "pfj/errors.hpp"

namespace pfj::cli {

namespace {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = obj.cbegin(); it != obj.cend(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
        }
    }
}

const json& require(const json& obj, const char* key,
                    const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError(where + " is missing required key '" + key + "'");
    }
    return *it;
}

double number_at(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where + " must be a number");
    return v.get<double>();
}

int integer_at(const json& v, const std::string& where) {
    if (!v.is_number_integer()) {
        throw ConfigError(where + " must be an integer");
    }
    return v.get<int>();
}

std::vector<double> number_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError(where + " must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(number_at(e, where + " entry"));
    return out;
}

Matrix number_table(const json& v, int rows, int cols,
                    const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows) {
        throw ConfigError(where + " must be an array of " +
                          std::to_string(rows) + " rows");
    }
    Matrix out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const std::vector<double> row = number_list(v[r], where + " row");
        if (static_cast<int>(row.size()) != cols) {
            throw ConfigError(where + " row " + std::to_string(r) +
                              " must have " + std::to_string(cols) +
                              " entries");
        }
        for (int c = 0; c < cols; ++c) out(r, c) = row[c];
    }
    return out;
}

WeightSpec parse_omega(const json& v) {
    WeightSpec w;
    if (v.is_string()) {
        const std::string name = v.get<std::string>();
        if (name == "uniform") {
            w.family = WeightSpec::Family::Uniform;
        } else if (name == "gaussian") {
            w.family = WeightSpec::Family::Gaussian;
        } else {
            throw ConfigError("unknown omega family '" + name + "'");
        }
        return w;
    }
    if (v.is_array()) {
        w.family = WeightSpec::Family::Explicit;
        w.values = number_list(v, "omega");
        return w;
    }
    if (v.is_object()) {
        check_keys(v, {"family", "a", "b"}, "omega");
        const std::string name =
            require(v, "family", "omega").get<std::string>();
        if (name == "uniform") {
            w.family = WeightSpec::Family::Uniform;
        } else if (name == "gaussian") {
            w.family = WeightSpec::Family::Gaussian;
        } else {
            throw ConfigError("unknown omega family '" + name + "'");
        }
        if (v.contains("a")) w.a = number_at(v["a"], "omega.a");
        if (v.contains("b")) w.b = number_at(v["b"], "omega.b");
        return w;
    }
    throw ConfigError("omega must be a family name, a value table, "
                      "or a family object");
}

std::vector<int> integer_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError(where + " must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(integer_at(e, where + " entry"));
    return out;
}

}  // namespace

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    check_keys(doc, {"space", "ensemble", "interval", "quadrature"}, "config");

    const json& ens = require(doc, "ensemble", "config");
    if (!ens.is_object()) throw ConfigError("ensemble must be an object");
    RunConfig rc;
    rc.family = require(ens, "family", "ensemble").get<std::string>();
    const int n = integer_at(require(ens, "n", "ensemble"), "ensemble.n");
    if (n < 1) throw ConfigError("ensemble.n must be positive");

    const bool doubled_family =
        rc.family == "beta2" || rc.family == "beta4" ||
        rc.family == "biorthogonal";
    const bool classical = doubled_family || rc.family == "beta1";
    if (!classical && rc.family != "custom") {
        throw ConfigError("unknown ensemble family '" + rc.family + "'");
    }

    if (rc.family == "custom") {
        check_keys(ens, {"family", "n", "phi", "epsilon"}, "ensemble");
    } else if (rc.family == "biorthogonal") {
        check_keys(ens, {"family", "n", "omega", "xi", "psi"}, "ensemble");
    } else {
        check_keys(ens, {"family", "n", "omega"}, "ensemble");
    }

    if (doc.contains("space") && doc.contains("quadrature")) {
        throw ConfigError("give either a space or a quadrature, not both");
    }

    // Resolve the base point space.
    PointSpace base;
    if (doc.contains("quadrature")) {
        if (rc.family == "custom" || rc.family == "biorthogonal") {
            throw ConfigError(rc.family +
                              " ensembles need an explicit space; tabulated "
                              "data cannot follow quadrature nodes");
        }
        const json& quad = doc["quadrature"];
        check_keys(quad, {"rule", "nodes"}, "quadrature");
        const std::string rule =
            require(quad, "rule", "quadrature").get<std::string>();
        const int nodes = integer_at(require(quad, "nodes", "quadrature"),
                                     "quadrature.nodes");
        WeightSpec omega;
        if (ens.contains("omega")) {
            omega = parse_omega(ens["omega"]);
        } else if (rule == "gauss-hermite") {
            omega.family = WeightSpec::Family::Gaussian;
        }
        if (omega.family == WeightSpec::Family::Explicit) {
            throw ConfigError(
                "tabulated omega cannot follow quadrature nodes; use a "
                "named family");
        }
        base = discretize(omega, rule, nodes);
    } else {
        const json& sp = require(doc, "space", "config");
        if (!sp.is_object()) throw ConfigError("space must be an object");
        check_keys(sp, {"points", "weights"}, "space");
        base.points = number_list(require(sp, "points", "space"),
                                  "space.points");
        if (sp.contains("weights")) {
            if (ens.contains("omega")) {
                throw ConfigError(
                    "give either space.weights or ensemble.omega, not both");
            }
            base.weights = number_list(sp["weights"], "space.weights");
        } else if (ens.contains("omega")) {
            base = weighted_space(std::move(base.points),
                                  parse_omega(ens["omega"]));
        } else if (rc.family == "custom") {
            throw ConfigError("custom ensembles need explicit space.weights");
        } else {
            base.weights.assign(base.points.size(), 1.0);
        }
        base.validate();
    }

    // Build the ensemble.
    const int mb = base.size();
    if (rc.family == "beta1") {
        rc.spec = beta1_spec(base, n);
    } else if (rc.family == "beta2") {
        rc.doubled = make_doubled(base);
        rc.spec = beta2_spec(*rc.doubled, n);
    } else if (rc.family == "beta4") {
        rc.doubled = make_doubled(base);
        rc.spec = beta4_spec(*rc.doubled, n);
    } else if (rc.family == "biorthogonal") {
        rc.doubled = make_doubled(base);
        const Matrix xi = number_table(require(ens, "xi", "ensemble"), n, mb,
                                       "ensemble.xi");
        const Matrix psi = number_table(require(ens, "psi", "ensemble"), n, mb,
                                        "ensemble.psi");
        rc.spec = biorthogonal_spec(xi, psi, *rc.doubled, n);
    } else {
        rc.spec.space = base;
        rc.spec.n = n;
        rc.spec.phi = number_table(require(ens, "phi", "ensemble"), 2 * n, mb,
                                   "ensemble.phi");
        try {
            rc.spec.epsilon = SkewMatrix(number_table(
                require(ens, "epsilon", "ensemble"), mb, mb,
                "ensemble.epsilon"));
        } catch (const NotSkewError& e) {
            throw ConfigError(std::string("ensemble.epsilon: ") + e.what());
        }
    }

    // Interval indices: base-space indices for doubled families (expanded
    // copy-consistently), direct space indices otherwise.
    if (doc.contains("interval")) {
        const std::vector<int> given =
            integer_list(doc["interval"], "interval");
        if (rc.doubled) {
            rc.interval = rc.doubled->interval(given);
        } else {
            rc.interval = normalize_interval(given, rc.spec.space.size());
        }
    }

    rc.warnings = rc.spec.validate();
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " +
                          e.what());
    }
    return parse_config(doc);
}

}  // namespace pfj::cli
