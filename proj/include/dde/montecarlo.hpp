#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dde/families.hpp"

namespace dde {

/// One size/power campaign: samples from `dgp`, tested against `null_family`
/// at every n in `n_grid`.
struct ExperimentSpec {
  Family null_family = Family::Normal;
  FittedModel dgp;
  std::vector<std::size_t> n_grid;
  std::size_t reps = 200;
  std::size_t n_boot = 300;
  double alpha = 0.05;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;

  bool operator==(const ExperimentSpec&) const = default;
};

struct SimCell {
  Family null_family = Family::Normal;
  FittedModel dgp;
  std::size_t n = 0;
  std::size_t reps = 0;        // replicates completed
  std::size_t rejections = 0;
  double rate = 0.0;
  double mc_se = 0.0;          // sqrt(rate (1 - rate) / reps)
  std::size_t failures = 0;    // replicates whose test raised an error

  bool operator==(const SimCell&) const = default;
};

struct SimReport {
  std::vector<SimCell> cells;

  bool operator==(const SimReport&) const = default;
};

/// Fraction of failed replicates above which a cell is abandoned.
inline constexpr double kMaxCellFailureFraction = 0.02;

/// Seed of the (null, dgp, n) cell derived from the master seed.
std::uint64_t cell_seed(std::uint64_t master_seed, Family null_family, const FittedModel& dgp,
                        std::size_t n);

/// Replicate r of a cell draws its sample from RandomStream(cell_seed).split(r)
/// and seeds its bootstrap from the same stream's next word, so results do not
/// depend on the thread schedule.
SimCell run_cell(Family null_family, const FittedModel& dgp, std::size_t n, std::size_t reps,
                 std::size_t n_boot, double alpha, std::uint64_t master_seed, unsigned threads = 1);

SimReport run_experiment(const ExperimentSpec& spec);

/// The four alternatives of the simulation design for a simulated null
/// (Normal, Exponential, Gamma, Laplace). Variances match the null member
/// (1, 4, 3, 1), Cauchy excepted.
std::vector<FittedModel> standard_alternatives(Family null_family);

/// The null member used for size runs: N(0,1), Exp(2), Gamma(3,1), Laplace(0, 1/sqrt 2).
FittedModel simulated_null_member(Family null_family);

}  // namespace dde
