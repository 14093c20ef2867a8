// Old Faithful waiting times (minutes between eruptions).
//
// faithful-hardle:   R `datasets::faithful$waiting`, 272 observations (Haerdle 1991).
// faithful-azzalini: R `MASS::geyser$waiting`, 299 observations (Azzalini and Bowman 1990).
//
// Generated from data/*.csv; keep both in sync.

#include "dde/dataset.hpp"

#include <array>

namespace dde {
namespace {

constexpr std::array<double, 272> kFaithfulHardle = {
    79.0, 54.0, 74.0, 62.0, 85.0, 55.0, 88.0, 85.0, 51.0, 85.0, 54.0, 84.0, 78.0, 47.0, 83.0, 52.0,
    62.0, 84.0, 52.0, 79.0, 51.0, 47.0, 78.0, 69.0, 74.0, 83.0, 55.0, 76.0, 78.0, 79.0, 73.0, 77.0,
    66.0, 80.0, 74.0, 52.0, 48.0, 80.0, 59.0, 90.0, 80.0, 58.0, 84.0, 58.0, 73.0, 83.0, 64.0, 53.0,
    82.0, 59.0, 75.0, 90.0, 54.0, 80.0, 54.0, 83.0, 71.0, 64.0, 77.0, 81.0, 59.0, 84.0, 48.0, 82.0,
    60.0, 92.0, 78.0, 78.0, 65.0, 73.0, 82.0, 56.0, 79.0, 71.0, 62.0, 76.0, 60.0, 78.0, 76.0, 83.0,
    75.0, 82.0, 70.0, 65.0, 73.0, 88.0, 76.0, 80.0, 48.0, 86.0, 60.0, 90.0, 50.0, 78.0, 63.0, 72.0,
    84.0, 75.0, 51.0, 82.0, 62.0, 88.0, 49.0, 83.0, 81.0, 47.0, 84.0, 52.0, 86.0, 81.0, 75.0, 59.0,
    89.0, 79.0, 59.0, 81.0, 50.0, 85.0, 59.0, 87.0, 53.0, 69.0, 77.0, 56.0, 88.0, 81.0, 45.0, 82.0,
    55.0, 90.0, 45.0, 83.0, 56.0, 89.0, 46.0, 82.0, 51.0, 86.0, 53.0, 79.0, 81.0, 60.0, 82.0, 77.0,
    76.0, 59.0, 80.0, 49.0, 96.0, 53.0, 77.0, 77.0, 65.0, 81.0, 71.0, 70.0, 81.0, 93.0, 53.0, 89.0,
    45.0, 86.0, 58.0, 78.0, 66.0, 76.0, 63.0, 88.0, 52.0, 93.0, 49.0, 57.0, 77.0, 68.0, 81.0, 81.0,
    73.0, 50.0, 85.0, 74.0, 55.0, 77.0, 83.0, 83.0, 51.0, 78.0, 84.0, 46.0, 83.0, 55.0, 81.0, 57.0,
    76.0, 84.0, 77.0, 81.0, 87.0, 77.0, 51.0, 78.0, 60.0, 82.0, 91.0, 53.0, 78.0, 46.0, 77.0, 84.0,
    49.0, 83.0, 71.0, 80.0, 49.0, 75.0, 64.0, 76.0, 53.0, 94.0, 55.0, 76.0, 50.0, 82.0, 54.0, 75.0,
    78.0, 79.0, 78.0, 78.0, 70.0, 79.0, 70.0, 54.0, 86.0, 50.0, 90.0, 54.0, 54.0, 77.0, 79.0, 64.0,
    75.0, 47.0, 86.0, 63.0, 85.0, 82.0, 57.0, 82.0, 67.0, 74.0, 54.0, 83.0, 73.0, 73.0, 88.0, 80.0,
    71.0, 83.0, 56.0, 79.0, 78.0, 84.0, 58.0, 83.0, 43.0, 60.0, 75.0, 81.0, 46.0, 90.0, 46.0, 74.0,
};

constexpr std::array<double, 299> kFaithfulAzzalini = {
    80.0, 71.0, 57.0, 80.0, 75.0, 77.0, 60.0, 86.0, 77.0, 56.0, 81.0, 50.0, 89.0, 54.0, 90.0, 73.0,
    60.0, 83.0, 65.0, 82.0, 84.0, 54.0, 85.0, 58.0, 79.0, 57.0, 88.0, 68.0, 76.0, 78.0, 74.0, 85.0,
    75.0, 65.0, 76.0, 58.0, 91.0, 50.0, 87.0, 48.0, 93.0, 54.0, 86.0, 53.0, 78.0, 52.0, 83.0, 60.0,
    87.0, 49.0, 80.0, 60.0, 92.0, 43.0, 89.0, 60.0, 84.0, 69.0, 74.0, 71.0, 108.0, 50.0, 77.0, 57.0,
    80.0, 61.0, 82.0, 48.0, 81.0, 73.0, 62.0, 79.0, 54.0, 80.0, 73.0, 81.0, 62.0, 81.0, 71.0, 79.0,
    81.0, 74.0, 59.0, 81.0, 66.0, 87.0, 53.0, 80.0, 50.0, 87.0, 51.0, 82.0, 58.0, 81.0, 49.0, 92.0,
    50.0, 88.0, 62.0, 93.0, 56.0, 89.0, 51.0, 79.0, 58.0, 82.0, 52.0, 88.0, 52.0, 78.0, 69.0, 75.0,
    77.0, 53.0, 80.0, 55.0, 87.0, 53.0, 85.0, 61.0, 93.0, 54.0, 76.0, 80.0, 81.0, 59.0, 86.0, 78.0,
    71.0, 77.0, 76.0, 94.0, 75.0, 50.0, 83.0, 82.0, 72.0, 77.0, 75.0, 65.0, 79.0, 72.0, 78.0, 77.0,
    79.0, 75.0, 78.0, 64.0, 80.0, 49.0, 88.0, 54.0, 85.0, 51.0, 96.0, 50.0, 80.0, 78.0, 81.0, 72.0,
    75.0, 78.0, 87.0, 69.0, 55.0, 83.0, 49.0, 82.0, 57.0, 84.0, 57.0, 84.0, 73.0, 78.0, 57.0, 79.0,
    57.0, 90.0, 62.0, 87.0, 78.0, 52.0, 98.0, 48.0, 78.0, 79.0, 65.0, 84.0, 50.0, 83.0, 60.0, 80.0,
    50.0, 88.0, 50.0, 84.0, 74.0, 76.0, 65.0, 89.0, 49.0, 88.0, 51.0, 78.0, 85.0, 65.0, 75.0, 77.0,
    69.0, 92.0, 68.0, 87.0, 61.0, 81.0, 55.0, 93.0, 53.0, 84.0, 70.0, 73.0, 93.0, 50.0, 87.0, 77.0,
    74.0, 72.0, 82.0, 74.0, 80.0, 49.0, 91.0, 53.0, 86.0, 49.0, 79.0, 89.0, 87.0, 76.0, 59.0, 80.0,
    89.0, 45.0, 93.0, 72.0, 71.0, 54.0, 79.0, 74.0, 65.0, 78.0, 57.0, 87.0, 72.0, 84.0, 47.0, 84.0,
    57.0, 87.0, 68.0, 86.0, 75.0, 73.0, 53.0, 82.0, 93.0, 77.0, 54.0, 96.0, 48.0, 89.0, 63.0, 84.0,
    76.0, 62.0, 83.0, 50.0, 85.0, 78.0, 78.0, 81.0, 78.0, 76.0, 74.0, 81.0, 66.0, 84.0, 48.0, 93.0,
    47.0, 87.0, 51.0, 78.0, 54.0, 87.0, 52.0, 85.0, 58.0, 88.0, 79.0,
};

}  // namespace

const std::vector<FixtureInfo>& bundled_fixtures() {
  static const std::vector<FixtureInfo> fixtures = {
      {"faithful-hardle", "Old Faithful waiting times, R datasets::faithful (Haerdle 1991)",
       {kFaithfulHardle.begin(), kFaithfulHardle.end()}},
      {"faithful-azzalini", "Old Faithful waiting times, R MASS::geyser (Azzalini and Bowman 1990)",
       {kFaithfulAzzalini.begin(), kFaithfulAzzalini.end()}},
  };
  return fixtures;
}

}  // namespace dde
