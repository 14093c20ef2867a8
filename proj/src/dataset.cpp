#include "dde/dataset.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "dde/error.hpp"

namespace dde {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

char detect_delimiter(std::string_view line) {
  for (char d : {',', ';', '\t'}) {
    if (line.find(d) != std::string_view::npos) return d;
  }
  return '\0';
}

// Splits one CSV record; double quotes protect delimiters and "" escapes a quote.
std::vector<std::string> split_record(std::string_view line, char delim) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (delim != '\0' && ch == delim) {
      cells.emplace_back();
    } else {
      cells.back() += ch;
    }
  }
  for (auto& c : cells) c = std::string(trim(c));
  return cells;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_index(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<double> parse_table(std::string_view text, const std::string& column,
                                const std::string& origin) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++lineno;
    const std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty()) lines.emplace_back(lineno, line);
    pos = end + 1;
  }
  if (lines.empty()) throw data_error(origin + ": no data");

  const char delim = detect_delimiter(lines.front().second);
  const std::vector<std::string> first = split_record(lines.front().second, delim);

  // A first row whose selected cell is not numeric is a header.
  std::optional<std::size_t> col = column.empty() ? std::optional<std::size_t>(0) : parse_index(column);
  bool has_header = false;
  if (col && *col < first.size()) {
    has_header = !parse_number(first[*col]).has_value();
  } else {
    has_header = true;
  }
  if (!col) {
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (first[i] == column) col = i;
    }
    if (!col) throw invalid_argument(origin + ": no column named '" + column + "'");
  }
  if (*col >= first.size()) {
    throw invalid_argument(origin + ": column index " + std::to_string(*col) + " out of range (" +
                           std::to_string(first.size()) + " columns)");
  }

  std::vector<double> values;
  for (std::size_t i = has_header ? 1 : 0; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    const std::vector<std::string> cells = split_record(line, delim);
    if (*col >= cells.size()) {
      throw data_error(origin + ":" + std::to_string(no) + ": missing column " + std::to_string(*col));
    }
    const auto v = parse_number(cells[*col]);
    if (!v) {
      throw data_error(origin + ":" + std::to_string(no) + ": non-numeric value '" + cells[*col] + "'");
    }
    if (!std::isfinite(*v)) {
      throw data_error(origin + ":" + std::to_string(no) + ": non-finite value '" + cells[*col] + "'");
    }
    values.push_back(*v);
  }
  if (values.empty()) throw data_error(origin + ": no numeric values");
  return values;
}

Dataset load_dataset(const std::string& path_or_fixture, const std::string& column) {
  for (const FixtureInfo& f : bundled_fixtures()) {
    if (f.id == path_or_fixture) return {f.id, f.values, "fixture:" + f.id};
  }
  std::ifstream in(path_or_fixture, std::ios::binary);
  if (!in) throw data_error("cannot open '" + path_or_fixture + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Dataset d;
  d.values = parse_table(buf.str(), column, path_or_fixture);
  d.name = std::filesystem::path(path_or_fixture).stem().string();
  d.source = path_or_fixture;
  return d;
}

}  // namespace dde
