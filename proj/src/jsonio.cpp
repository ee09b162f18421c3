#include "pfj/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace pfj {

namespace {

void write_value(const nlohmann::json& j, int indent, int depth,
                 std::string& out) {
    const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.cbegin(); it != j.cend(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                write_value(it.value(), indent, depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                write_value(v, indent, depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            // Keep floats recognizably floating-point on re-parse.
            if (out.find_first_of(".eE", out.size() - std::strlen(buf)) ==
                std::string::npos) {
                out += ".0";
            }
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_deterministic(const nlohmann::json& j, int indent) {
    std::string out;
    write_value(j, indent, 0, out);
    out += "\n";
    return out;
}

}  // namespace pfj
