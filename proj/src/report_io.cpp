#include "kgconf/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace kgconf {

namespace {

using json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || end != t.data() + t.size())
    throw ConfigError("invalid " + std::string(what) + ": '" + t + "'");
  return v;
}

json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json cell_json(const Table::Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return number_json(*d);
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(Format f) { return f == Format::json ? "json" : "csv"; }

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw ConfigError("unknown format '" + std::string(text) + "' (json or csv)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string report_to_json(const ResidualReport& report, bool include_timing) {
  json cases = json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"name", c.name},
                     {"max_residual", number_json(c.max_residual)},
                     {"error_estimate", number_json(c.error_estimate)},
                     {"tolerance", number_json(c.tolerance)},
                     {"pass", c.pass()}});
  json doc{{"suite", report.suite},
           {"mode", std::string(to_string(report.mode))},
           {"cases", std::move(cases)},
           {"summary", {{"pass", report.pass()},
                        {"wall_ms", include_timing ? report.wall_ms : 0.0}}}};
  return doc.dump(2) + "\n";
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw ConfigError("table row has " + std::to_string(row.size()) + " cells, expected " +
                      std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::string table_to_csv(const Table& table) {
  std::string out;
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out += ',';
    out += csv_quote(table.columns[j]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      if (const auto* d = std::get_if<double>(&row[j]))
        out += format_number(*d);
      else if (const auto* i = std::get_if<long long>(&row[j]))
        out += std::to_string(*i);
      else
        out += csv_quote(std::get<std::string>(row[j]));
    }
    out += '\n';
  }
  return out;
}

std::string table_to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t j = 0; j < row.size(); ++j) obj[table.columns[j]] = cell_json(row[j]);
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
  return format == Format::json ? table_to_json(table) : table_to_csv(table);
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ConfigError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot move output into '" + path.string() + "'");
  }
}

std::vector<SpaceTimePoint> parse_points(std::istream& in) {
  std::vector<SpaceTimePoint> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    SpaceTimePoint p;
    std::string extra;
    if (!(fields >> p.x[0] >> p.x[1] >> p.x[2] >> p.t) || (fields >> extra))
      throw ConfigError("points line " + std::to_string(number) +
                        ": expected four numbers 'x1 x2 x3 t'");
    out.push_back(p);
  }
  return out;
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots), "range start");
  const int hi = parse_int(text.substr(dots + 2), "range end");
  if (hi < lo) throw ConfigError("range end precedes its start");
  return {lo, hi};
}

coulomb::State parse_state(std::string_view text, Branch branch) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::vector<int> parts;
  std::string_view rest(t);
  while (true) {
    const auto comma = rest.find(',');
    parts.push_back(parse_int(rest.substr(0, comma), "state"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw ConfigError("state must be 'n,l' or 'n,l,k', got '" + std::string(text) + "'");
  coulomb::State s{parts[0], parts[1], parts.size() == 3 ? parts[2] : 0, branch};
  s.validate();
  return s;
}

std::vector<coulomb::State> parse_states(std::string_view text, Branch branch) {
  std::vector<coulomb::State> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string item = trim(rest.substr(0, semi));
    if (!item.empty()) out.push_back(parse_state(item, branch));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  if (out.empty()) throw ConfigError("no states given");
  return out;
}

}  // namespace kgconf
