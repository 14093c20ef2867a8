#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "dde/families.hpp"

namespace dde {

/// Shape categories that drive the bandwidth multiplier c.
enum class Regime { Gaussian, NearGaussian, NonGaussianReal, RightSkewedPositive };

std::string_view regime_name(Regime r);

/// Shape statistics on the working scale (ln data for positive-support nulls).
/// Moments use divisor n.
struct ShapeStats {
  double kappa_hat = 0.0;   // sample kurtosis
  double skew_hat = 0.0;    // sample skewness
  double kappa0 = 0.0;      // kurtosis implied by the fitted null
  double tau = 0.0;         // min(max(kappa_hat, 2), 10)
  double gamma_kurt = 0.0;  // kappa0 / tau
  double sigma_hat = 0.0;   // sample standard deviation (divisor n - 1)

  bool operator==(const ShapeStats&) const = default;
};

/// h = k_n * c * sigma_hat * n^(-1/5).
struct BandwidthSpec {
  double h = 0.0;
  double c = 1.0;
  double k_n = 1.0;
  std::size_t n = 0;
  Scale scale = Scale::Raw;
  ShapeStats shape;
  Regime regime = Regime::Gaussian;

  bool operator==(const BandwidthSpec&) const = default;
};

inline constexpr double kMinShapeMultiplier = 0.85;
inline constexpr double kMaxShapeMultiplier = 1.15;

double truncated_kurtosis(double kappa_hat);

/// Small-sample inflation: 1 for n >= 100, 1.25 - 0.25 (n - 50) / 50 below,
/// with n floored at 30.
double small_sample_inflation(std::size_t n);

Regime classify_regime(Family null_family, std::span<const double> data);

/// c = 1 for Gaussian and NearGaussian; otherwise
/// clamp(1 + 0.1 log2(kappa0 / tau(kappa_hat)), 0.85, 1.15).
double shape_multiplier(Regime regime, double kappa0, double kappa_hat);

/// Full rule for the fitted null applied to `data` (raw observations). The
/// same call is used on bootstrap samples with their own refitted model.
BandwidthSpec select_bandwidth(const FittedModel& fitted, std::span<const double> data);

/// A bandwidth fixed by the caller (c = k_n = 1); for studies that bypass the
/// shape-adaptive rule.
BandwidthSpec fixed_bandwidth(double h, std::size_t n, Scale scale);

}  // namespace dde
