#include "dde/bandwidth.hpp"

#include <algorithm>
#include <cmath>

#include "dde/error.hpp"
#include "dde/sample_stats.hpp"

namespace dde {

namespace {

constexpr std::size_t kMinShapeObservations = 4;

ShapeStats working_scale_stats(std::span<const double> working) {
  const Moments m = central_moments(working);
  if (!(m.m2 > 0.0)) throw data_error("degenerate data: zero variance on the working scale");
  ShapeStats s;
  s.kappa_hat = m.kurtosis();
  s.skew_hat = m.skewness();
  s.tau = truncated_kurtosis(s.kappa_hat);
  s.sigma_hat = sample_sd(working);
  return s;
}

Regime regime_from_stats(Family null_family, const ShapeStats& s) {
  if (null_family == Family::Normal) return Regime::Gaussian;
  if (support_of(null_family) == Support::Positive) return Regime::RightSkewedPositive;
  const bool near = std::abs(s.skew_hat) <= 0.5 && s.kappa_hat >= 2.0 && s.kappa_hat <= 4.0;
  return near ? Regime::NearGaussian : Regime::NonGaussianReal;
}

std::vector<double> to_working_scale(Family f, std::span<const double> data) {
  if (data.size() < kMinShapeObservations) {
    throw data_error("bandwidth selection needs at least 4 observations");
  }
  if (working_scale(f) == Scale::Log) return log_transform(data);
  return {data.begin(), data.end()};
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Gaussian: return "Gaussian";
    case Regime::NearGaussian: return "NearGaussian";
    case Regime::NonGaussianReal: return "NonGaussianReal";
    case Regime::RightSkewedPositive: return "RightSkewedPositive";
  }
  return "?";
}

double truncated_kurtosis(double kappa_hat) { return std::min(std::max(kappa_hat, 2.0), 10.0); }

double small_sample_inflation(std::size_t n) {
  if (n >= 100) return 1.0;
  const double nn = static_cast<double>(std::max<std::size_t>(n, 30));
  return 1.25 - 0.25 * (nn - 50.0) / 50.0;
}

Regime classify_regime(Family null_family, std::span<const double> data) {
  const auto w = to_working_scale(null_family, data);
  return regime_from_stats(null_family, working_scale_stats(w));
}

double shape_multiplier(Regime regime, double kappa0, double kappa_hat) {
  if (regime == Regime::Gaussian || regime == Regime::NearGaussian) return 1.0;
  if (!(kappa0 > 0.0)) throw invalid_argument("null kurtosis must be positive");
  const double c = 1.0 + 0.1 * std::log2(kappa0 / truncated_kurtosis(kappa_hat));
  return std::clamp(c, kMinShapeMultiplier, kMaxShapeMultiplier);
}

BandwidthSpec select_bandwidth(const FittedModel& fitted, std::span<const double> data) {
  validate(fitted);
  const auto w = to_working_scale(fitted.family, data);
  BandwidthSpec b;
  b.shape = working_scale_stats(w);
  b.regime = regime_from_stats(fitted.family, b.shape);
  b.shape.kappa0 = null_kurtosis(fitted);
  b.shape.gamma_kurt = b.shape.kappa0 / b.shape.tau;
  b.n = w.size();
  b.scale = working_scale(fitted.family);
  b.c = shape_multiplier(b.regime, b.shape.kappa0, b.shape.kappa_hat);
  b.k_n = small_sample_inflation(b.n);
  b.h = b.k_n * b.c * b.shape.sigma_hat * std::pow(static_cast<double>(b.n), -0.2);
  if (!(b.h > 0.0) || !std::isfinite(b.h)) throw data_error("degenerate data: bandwidth is zero");
  return b;
}

BandwidthSpec fixed_bandwidth(double h, std::size_t n, Scale scale) {
  if (!(h > 0.0) || !std::isfinite(h)) throw invalid_argument("bandwidth must be positive");
  if (n == 0) throw invalid_argument("bandwidth sample size must be positive");
  BandwidthSpec b;
  b.h = h;
  b.n = n;
  b.scale = scale;
  b.shape.sigma_hat = h * std::pow(static_cast<double>(n), 0.2);
  return b;
}

}  // namespace dde
