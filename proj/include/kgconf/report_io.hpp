#pragma once

// Serialization of reports, spectrum tables and mapped points, plus the
// small text parsers the command-line front end needs.

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kgconf/coulomb.hpp"
#include "kgconf/report.hpp"

namespace kgconf {

enum class Format { json, csv };

std::string_view to_string(Format f);
Format parse_format(std::string_view text);

/// Shortest round-trip decimal form, '.' separator, locale independent.
std::string format_number(double v);

/// {"suite", "mode", "cases": [...], "summary": {"pass", "wall_ms"}}.
/// wall_ms is written as 0 unless include_timing is set, so that repeated
/// runs produce identical bytes.
std::string report_to_json(const ResidualReport& report, bool include_timing = false);

/// A header row plus rows of numbers or strings.
struct Table {
  using Cell = std::variant<double, long long, std::string>;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// CSV: header row, comma separated, strings quoted only when needed.
std::string table_to_csv(const Table& table);
/// JSON: an array of objects keyed by column name.
std::string table_to_json(const Table& table);
std::string render(const Table& table, Format format);

/// Writes through a temporary file in the same directory and renames it
/// into place. Throws ConfigError on I/O failure.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// One `x1 x2 x3 t` record per line; '#' starts a comment; blank lines are
/// skipped. Throws ConfigError naming the offending line.
std::vector<SpaceTimePoint> parse_points(std::istream& in);

/// "a..b" or a single integer "a".
std::pair<int, int> parse_range(std::string_view text);

/// "n,l" or "n,l,k" (k defaults to 0).
coulomb::State parse_state(std::string_view text, Branch branch = Branch::sommerfeld);
/// "(n,l);(n,l,k);..." with optional parentheses and whitespace.
std::vector<coulomb::State> parse_states(std::string_view text,
                                         Branch branch = Branch::sommerfeld);

}  // namespace kgconf
