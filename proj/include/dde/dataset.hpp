#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dde {

struct Dataset {
  std::string name;
  std::vector<double> values;  // nonempty, all finite
  std::string source;          // file path or fixture id

  bool operator==(const Dataset&) const = default;
};

struct FixtureInfo {
  std::string id;
  std::string description;
  std::vector<double> values;
};

/// Datasets compiled into the library.
const std::vector<FixtureInfo>& bundled_fixtures();

/// Loads a bundled fixture by id, or a file. Files are either single-column
/// plain text or CSV with a header row; `column` is a header name or a
/// zero-based index ("" means column 0). Blank lines are skipped; a
/// non-numeric cell is a Data error naming its line.
Dataset load_dataset(const std::string& path_or_fixture, const std::string& column = "");

/// Parses text already in memory with the same rules as load_dataset.
std::vector<double> parse_table(std::string_view text, const std::string& column,
                                const std::string& origin = "<input>");

}  // namespace dde
