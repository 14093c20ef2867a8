#pragma once

#include <span>
#include <vector>

namespace dde {

/// Central moments with divisor n.
struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;

  double skewness() const;
  double kurtosis() const;
};

Moments central_moments(std::span<const double> x);

double mean(std::span<const double> x);
/// Standard deviation with divisor n - 1.
double sample_sd(std::span<const double> x);

/// Quantile by linear interpolation of order statistics (R type 7).
/// `sorted` must be ascending and nonempty; 0 <= prob <= 1.
double quantile_sorted(std::span<const double> sorted, double prob);
double quantile(std::span<const double> x, double prob);

std::vector<double> log_transform(std::span<const double> x);

}  // namespace dde
