#include "cli/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace polymer::cli {
namespace {

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

std::string json_cell(const Cell& c) {
    if (auto d = std::get_if<double>(&c)) {
        // JSON has no inf/nan; such cells become null.
        return std::isfinite(*d) ? format_double(*d, 17) : "null";
    }
    if (auto i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (auto b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    return json_string(std::get<std::string>(c));
}

std::string csv_cell(const Cell& c) {
    if (auto d = std::get_if<double>(&c)) return format_double(*d, 12);
    if (auto i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (auto b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    return std::get<std::string>(c);
}

}  // namespace

std::string format_double(double v, int digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0 into 0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string render_json(const Envelope& env) {
    std::ostringstream os;
    os << "{\n  \"schema_version\": " << json_string(kSchemaVersion) << ",\n";
    os << "  \"command\": " << json_string(env.command) << ",\n";
    os << "  \"config_echo\": {";
    for (std::size_t i = 0; i < env.config.size(); ++i) {
        os << (i ? ", " : "") << json_string(env.config[i].first) << ": " << json_cell(env.config[i].second);
    }
    os << "},\n  \"columns\": [";
    for (std::size_t i = 0; i < env.columns.size(); ++i) os << (i ? ", " : "") << json_string(env.columns[i]);
    os << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < env.rows.size(); ++r) {
        os << (r ? ",\n    " : "\n    ") << "[";
        for (std::size_t i = 0; i < env.rows[r].size(); ++i) os << (i ? ", " : "") << json_cell(env.rows[r][i]);
        os << "]";
    }
    os << (env.rows.empty() ? "],\n" : "\n  ],\n");
    os << "  \"warnings\": [";
    for (std::size_t i = 0; i < env.warnings.size(); ++i) os << (i ? ", " : "") << json_string(env.warnings[i]);
    os << "]\n}\n";
    return os.str();
}

std::string render_csv(const Envelope& env) {
    std::ostringstream os;
    os << "# schema_version: " << kSchemaVersion << "\n";
    os << "# command: " << env.command << "\n";
    for (const auto& [k, v] : env.config) os << "# " << k << ": " << csv_cell(v) << "\n";
    for (const auto& w : env.warnings) os << "# warning: " << w << "\n";
    for (std::size_t i = 0; i < env.columns.size(); ++i) os << (i ? "," : "") << env.columns[i];
    os << "\n";
    for (const auto& row : env.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\n";
    }
    return os.str();
}

}  // namespace polymer::cli
