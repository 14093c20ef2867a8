#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "dde/families.hpp"

namespace dde {

/// Finite integration interval and the scale it lives on.
struct IntegrationRange {
  double lower = 0.0;
  double upper = 1.0;
  Scale scale = Scale::Raw;
};

struct QuadratureOptions {
  double abs_tol = 1e-8;
  std::size_t max_intervals = std::size_t{1} << 15;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  std::size_t intervals = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration by interval bisection.
/// Never throws for non-convergence; check `converged`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower,
                                    double upper, const QuadratureOptions& opts = {});

/// Integral over `range` with absolute error <= tol. Throws a Numeric error
/// (carrying the achieved error) when the subdivision cap is hit or the
/// integrand is not finite.
double integrate(const std::function<double(double)>& f, const IntegrationRange& range,
                 double tol = 1e-8);

/// Default number of bandwidths added beyond the extreme quantiles.
inline constexpr double kRangeBandwidths = 5.0;

/// Integration range for entropy functionals: [q(.001) - m h, q(.999) + m h],
/// on the raw scale for Real support and on ln(data) for Positive support.
/// Quantiles interpolate order statistics linearly.
IntegrationRange entropy_range(std::span<const double> data, double h, Support support,
                               double multiple = kRangeBandwidths);

}  // namespace dde
