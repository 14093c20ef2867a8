#include <doctest.h>

#include <cmath>

#include "dde/bandwidth.hpp"
#include "dde/error.hpp"
#include "dde/sample_stats.hpp"

using namespace dde;

namespace {

// Deterministic sample with prescribed mean 0, variance 1, skewness and
// kurtosis: a symmetric three-point mixture {-a, 0, a} plus a skewing pair.
std::vector<double> symmetric_sample(double kurtosis, std::size_t n) {
  // Points +-a with weight w each and 0 with weight 1 - 2w:
  // variance 2 w a^2 = 1, kurtosis 2 w a^4 = kurtosis.
  const double w = 1.0 / (2.0 * kurtosis);
  const double a = std::sqrt(kurtosis);
  const auto k = static_cast<std::size_t>(std::round(w * n));
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    x[i] = a;
    x[n - 1 - i] = -a;
  }
  return x;
}

}  // namespace

TEST_CASE("small-sample inflation") {
  CHECK(small_sample_inflation(50) == 1.25);
  CHECK(small_sample_inflation(75) == 1.125);
  CHECK(small_sample_inflation(100) == 1.0);
  CHECK(small_sample_inflation(5000) == 1.0);
  CHECK(small_sample_inflation(99) == doctest::Approx(1.005));
  CHECK(small_sample_inflation(30) == doctest::Approx(1.35));
  CHECK(small_sample_inflation(10) == small_sample_inflation(30));
  for (std::size_t n = 50; n < 100; ++n) {
    CHECK(small_sample_inflation(n) >= 1.0);
    CHECK(small_sample_inflation(n) <= 1.25);
  }
}

TEST_CASE("shape multiplier") {
  CHECK(shape_multiplier(Regime::Gaussian, 40.0, 2.0) == 1.0);
  CHECK(shape_multiplier(Regime::NearGaussian, 6.0, 3.0) == 1.0);
  CHECK(shape_multiplier(Regime::NonGaussianReal, 6.0, 3.0) == doctest::Approx(1.1));
  CHECK(shape_multiplier(Regime::RightSkewedPositive, 32.0, 2.0) == 1.15);
  CHECK(shape_multiplier(Regime::RightSkewedPositive, 1.0, 10.0) == 0.85);
  // tau truncates kappa_hat to [2, 10] before the ratio is taken.
  CHECK(shape_multiplier(Regime::NonGaussianReal, 4.0, 0.5) == doctest::Approx(1.1));
  CHECK(shape_multiplier(Regime::NonGaussianReal, 20.0, 500.0) == doctest::Approx(1.1));
  for (double k0 : {1e-6, 0.3, 3.0, 6.0, 1e6}) {
    for (double kh : {-5.0, 0.0, 1.0, 3.0, 9.0, 1e9}) {
      const double c = shape_multiplier(Regime::NonGaussianReal, k0, kh);
      CHECK(c >= kMinShapeMultiplier);
      CHECK(c <= kMaxShapeMultiplier);
    }
  }
  CHECK(truncated_kurtosis(1.0) == 2.0);
  CHECK(truncated_kurtosis(12.0) == 10.0);
  CHECK(truncated_kurtosis(4.5) == 4.5);
}

TEST_CASE("regimes") {
  RandomStream rng(3);
  const auto heavy = sample(make_model(Family::Cauchy, {0.0, 1.0}), 200, rng);
  CHECK(classify_regime(Family::Normal, heavy) == Regime::Gaussian);

  // Laplace null, kurtosis 3.2, zero skew: near-Gaussian.
  const auto near = symmetric_sample(3.2, 1000);
  const Moments m = central_moments(near);
  CHECK(m.kurtosis() == doctest::Approx(3.2).epsilon(0.01));
  CHECK(classify_regime(Family::Laplace, near) == Regime::NearGaussian);
  const auto lap = symmetric_sample(6.0, 1000);
  CHECK(classify_regime(Family::Laplace, lap) == Regime::NonGaussianReal);

  RandomStream rg(4);
  const auto g = sample(make_model(Family::Gamma, {3.0, 1.0}), 200, rg);
  CHECK(classify_regime(Family::Gamma, g) == Regime::RightSkewedPositive);
  CHECK_THROWS_AS(classify_regime(Family::Normal, std::vector<double>{1.0, 2.0, 3.0}), Error);
}

TEST_CASE("bandwidth formula") {
  RandomStream rng(10);
  const auto model = make_model(Family::Normal, {0.0, 1.0});
  auto x = sample(model, 250, rng);
  // Standardize so the sample standard deviation is exactly 1.
  const double mu = mean(x), sd = sample_sd(x);
  for (double& v : x) v = (v - mu) / sd;
  const BandwidthSpec bw = select_bandwidth(fit(Family::Normal, x), x);
  CHECK(bw.regime == Regime::Gaussian);
  CHECK(bw.c == 1.0);
  CHECK(bw.k_n == 1.0);
  CHECK(bw.h == doctest::Approx(std::pow(250.0, -0.2)).epsilon(1e-12));
  CHECK(bw.h == doctest::Approx(0.3314).epsilon(1e-3));
  CHECK(bw.scale == Scale::Raw);
}

TEST_CASE("positive-support nulls use ln-scale statistics") {
  RandomStream rng(12);
  const auto model = make_model(Family::Gamma, {3.0, 2.0});
  const auto x = sample(model, 60, rng);
  const FittedModel f = fit(Family::Gamma, x);
  const BandwidthSpec bw = select_bandwidth(f, x);
  const auto lx = log_transform(x);
  const Moments m = central_moments(lx);
  CHECK(bw.scale == Scale::Log);
  CHECK(bw.regime == Regime::RightSkewedPositive);
  CHECK(bw.shape.sigma_hat == doctest::Approx(sample_sd(lx)));
  CHECK(bw.shape.kappa_hat == doctest::Approx(m.kurtosis()));
  CHECK(bw.shape.skew_hat == doctest::Approx(m.skewness()));
  CHECK(bw.shape.kappa0 == doctest::Approx(null_kurtosis(f, Scale::Log)));
  CHECK(bw.shape.tau == truncated_kurtosis(bw.shape.kappa_hat));
  CHECK(bw.k_n == small_sample_inflation(60));
  CHECK(bw.c == shape_multiplier(bw.regime, bw.shape.kappa0, bw.shape.kappa_hat));
  CHECK(bw.h == doctest::Approx(bw.k_n * bw.c * bw.shape.sigma_hat * std::pow(60.0, -0.2)).epsilon(1e-15));
}
