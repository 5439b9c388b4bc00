#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace zc::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

struct RunConfig {
    std::string command;
    int a = 0;
    std::optional<int> r;
    int n = 0;
    std::vector<int> ns;
    unsigned digits = 0;  // 0: command default or ZETACERT_DIGITS
    std::string in_path;
    std::string out_path;
    Format format = Format::Json;
};

struct Outcome {
    Json artifact;
    std::string csv;  // used when format == Csv
    bool pass = true;
    std::vector<std::string> warnings;
};

// "20..40" or "20,22,25"
std::vector<int> parse_n_range(const std::string& text);

Outcome cmd_forms(const RunConfig& cfg);
Outcome cmd_asymptotics(const RunConfig& cfg);
Outcome cmd_rank_bound(const RunConfig& cfg);
Outcome cmd_rates(const RunConfig& cfg);
Outcome cmd_criterion(const RunConfig& cfg);

// Parses a JSON document; malformed input becomes an InputError naming line and column.
nlohmann::json parse_document(const std::string& text, const std::string& source);

}  // namespace zc::cli
