#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace runstat::cli {

enum class Format { Json, Csv };

Format parse_format(std::string_view text);

struct ErrataFlag {
    std::string id;
    std::string status;

    bool operator==(const ErrataFlag&) const = default;
};

// One command result. Scalars live in `parameters` (inputs echoed back) and
// `summary` (derived values); tabular payload in `columns`/`rows`.
struct OutputRecord {
    std::string kind;  // pmf, moments, fit, count, check, fib
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::ordered_json>> rows;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::vector<ErrataFlag> errata_flags;

    bool operator==(const OutputRecord&) const = default;
};

/// JSON: one object per line. CSV: one tagged row per line
/// (kind / parameter / columns / row / summary / flag); strings are always
/// quoted so that bare fields are numbers, booleans, or empty (null).
std::string render(const OutputRecord& rec, Format fmt);
OutputRecord parse_record(std::string_view text, Format fmt);

/// Full command line without the program name. Writes the record to `out`
/// and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOverflow = 3;
inline constexpr int kExitNumerical = 4;

}  // namespace runstat::cli
