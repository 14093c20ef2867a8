#include "dde/sample_stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dde/error.hpp"

namespace dde {

double Moments::skewness() const { return m3 / std::pow(m2, 1.5); }
double Moments::kurtosis() const { return m4 / (m2 * m2); }

double mean(std::span<const double> x) {
  if (x.empty()) throw data_error("mean of empty sample");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

Moments central_moments(std::span<const double> x) {
  Moments m;
  m.mean = mean(x);
  for (double v : x) {
    const double d = v - m.mean;
    const double d2 = d * d;
    m.m2 += d2;
    m.m3 += d2 * d;
    m.m4 += d2 * d2;
  }
  const auto n = static_cast<double>(x.size());
  m.m2 /= n;
  m.m3 /= n;
  m.m4 /= n;
  return m;
}

double sample_sd(std::span<const double> x) {
  if (x.size() < 2) throw data_error("standard deviation needs at least two observations");
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double quantile_sorted(std::span<const double> sorted, double prob) {
  if (sorted.empty()) throw data_error("quantile of empty sample");
  if (!(prob >= 0.0 && prob <= 1.0)) throw invalid_argument("quantile probability outside [0, 1]");
  const double pos = prob * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double quantile(std::span<const double> x, double prob) {
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  return quantile_sorted(s, prob);
}

std::vector<double> log_transform(std::span<const double> x) {
  std::vector<double> y;
  y.reserve(x.size());
  for (double v : x) {
    if (!(v > 0.0)) throw data_error("ln-scale estimation needs strictly positive data (found " + std::to_string(v) + ")");
    y.push_back(std::log(v));
  }
  return y;
}

}  // namespace dde
