#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polymer::cli {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

inline constexpr const char* kSchemaVersion = "1";

// Result of one command. Rendered as CSV (header comments + table) or JSON.
struct Envelope {
    std::string command;
    std::vector<std::pair<std::string, Cell>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> warnings;
    int exit_code = 0;

    void echo(std::string key, Cell value) { config.emplace_back(std::move(key), std::move(value)); }
    void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

// Doubles with 17 significant digits.
std::string render_json(const Envelope& env);
// Doubles with 12 significant digits; config and warnings as '#' comments.
std::string render_csv(const Envelope& env);

std::string format_double(double v, int digits);

}  // namespace polymer::cli
