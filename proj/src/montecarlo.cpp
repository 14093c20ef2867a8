#include "dde/montecarlo.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <optional>

#include "dde/dde_test.hpp"
#include "dde/error.hpp"
#include "dde/parallel.hpp"

namespace dde {

namespace {

std::uint64_t bits_of(double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, sizeof u);
  return u;
}

}  // namespace

std::uint64_t cell_seed(std::uint64_t master_seed, Family null_family, const FittedModel& dgp,
                        std::size_t n) {
  std::uint64_t h = mix64(master_seed);
  auto absorb = [&h](std::uint64_t v) { h = mix64(h ^ mix64(v)); };
  absorb(static_cast<std::uint64_t>(null_family));
  absorb(static_cast<std::uint64_t>(dgp.family));
  for (double t : dgp.theta) absorb(bits_of(t));
  absorb(static_cast<std::uint64_t>(n));
  return h;
}

SimCell run_cell(Family null_family, const FittedModel& dgp, std::size_t n, std::size_t reps,
                 std::size_t n_boot, double alpha, std::uint64_t master_seed, unsigned threads) {
  if (reps == 0) throw invalid_argument("reps must be at least 1");
  if (n < min_fit_size(null_family) || n < 4) throw invalid_argument("sample size below the minimum fit size");
  validate(dgp);

  // Replicates run in parallel; each bootstrap runs serially inside.
  std::vector<std::optional<bool>> outcome(reps);
  const RandomStream cell(cell_seed(master_seed, null_family, dgp, n));
  parallel_for(reps, threads, [&](std::size_t r) {
    RandomStream rng = cell.split(r);
    const std::vector<double> x = sample(dgp, n, rng);
    TestConfig cfg;
    cfg.family = null_family;
    cfg.alpha = alpha;
    cfg.n_boot = n_boot;
    cfg.seed = rng.next_u64();
    cfg.threads = 1;
    try {
      outcome[r] = run_test(x, cfg).reject;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument) throw;
    }
  });

  SimCell c;
  c.null_family = null_family;
  c.dgp = dgp;
  c.n = n;
  for (const auto& o : outcome) {
    if (!o) {
      ++c.failures;
      continue;
    }
    ++c.reps;
    if (*o) ++c.rejections;
  }
  if (static_cast<double>(c.failures) > kMaxCellFailureFraction * static_cast<double>(reps)) {
    throw fit_error(std::to_string(c.failures) + " of " + std::to_string(reps) + " replicates failed in cell " +
                    std::string(info(null_family).name) + " vs " + describe(dgp) + " at n=" + std::to_string(n));
  }
  c.rate = static_cast<double>(c.rejections) / static_cast<double>(c.reps);
  c.mc_se = std::sqrt(c.rate * (1.0 - c.rate) / static_cast<double>(c.reps));
  return c;
}

SimReport run_experiment(const ExperimentSpec& spec) {
  if (spec.reps == 0) throw invalid_argument("reps must be at least 1");
  if (spec.n_grid.empty()) throw invalid_argument("n_grid is empty");
  if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) throw invalid_argument("alpha must lie in (0, 1)");
  if (spec.n_boot == 0) throw invalid_argument("n_boot must be at least 1");
  if (!info(spec.null_family).testable) throw invalid_argument("null family is not testable");
  for (std::size_t n : spec.n_grid) {
    if (n < min_fit_size(spec.null_family) || n < 4) {
      throw invalid_argument("n=" + std::to_string(n) + " is below the minimum fit size");
    }
  }
  SimReport report;
  for (std::size_t n : spec.n_grid) {
    report.cells.push_back(run_cell(spec.null_family, spec.dgp, n, spec.reps, spec.n_boot, spec.alpha,
                                    spec.master_seed, resolve_threads(spec.threads)));
  }
  return report;
}

FittedModel simulated_null_member(Family null_family) {
  switch (null_family) {
    case Family::Normal: return make_model(Family::Normal, {0.0, 1.0});
    case Family::Exponential: return make_model(Family::Exponential, {2.0});
    case Family::Gamma: return make_model(Family::Gamma, {3.0, 1.0});
    case Family::Laplace: return make_model(Family::Laplace, {0.0, 1.0 / std::numbers::sqrt2});
    default:
      throw invalid_argument(std::string(info(null_family).display) + " is not a simulated null");
  }
}

std::vector<FittedModel> standard_alternatives(Family null_family) {
  using std::numbers::pi;
  const double inv_sqrt3 = 1.0 / std::numbers::sqrt3;
  // Symmetric alternatives shared by the Normal and Laplace rows, unit variance.
  const FittedModel logistic = make_model(Family::Logistic, {0.0, std::numbers::sqrt3 / pi});
  const FittedModel cauchy = make_model(Family::Cauchy, {0.0, 1.0});
  const FittedModel t3 = make_model(Family::ScaledStudentT, {3.0, inv_sqrt3});
  switch (null_family) {
    case Family::Normal:
      return {make_model(Family::Laplace, {0.0, 1.0 / std::numbers::sqrt2}), logistic, cauchy, t3};
    case Family::Laplace:
      return {make_model(Family::Normal, {0.0, 1.0}), logistic, cauchy, t3};
    case Family::Exponential:
      // Rayleigh matches the variance 4 only, Lomax the mean 2 only; the
      // other two match both.
      return {make_model(Family::Rayleigh, {std::sqrt(8.0 / (4.0 - pi))}),
              make_model(Family::LogLogistic, {2.6954, 1.5764}),
              make_model(Family::Lomax, {3.0, 4.0}),
              make_model(Family::Lognormal, {0.3466, std::log(2.0)})};
    case Family::Gamma:
      // Mean 3, variance 3.
      return {make_model(Family::Weibull, {1.7915, 3.3727}),
              make_model(Family::LogLogistic, {3.72, 2.66}),
              make_model(Family::InverseGaussian, {3.0, 9.0}),
              make_model(Family::Lognormal, {0.9548, std::log(4.0 / 3.0)})};
    default:
      throw invalid_argument(std::string(info(null_family).display) + " is not a simulated null");
  }
}

}  // namespace dde
