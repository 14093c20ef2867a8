#include "dde/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dde/error.hpp"
#include "dde/sample_stats.hpp"
#include "dde/special.hpp"

namespace dde {

namespace {

// Kernel terms beyond this many bandwidths are below 1e-31 of the peak.
constexpr double kKernelCutoff = 12.0;

bool has_tabulated_ml_bias(Family f) {
  return f == Family::Normal || f == Family::Exponential || f == Family::Gamma ||
         f == Family::Laplace;
}

double neg_f_log_f(double log_f) {
  if (log_f == -std::numeric_limits<double>::infinity()) return 0.0;
  return -std::exp(log_f) * log_f;
}

}  // namespace

EntropyEstimate de_ml(const FittedModel& fitted) {
  validate(fitted);
  EntropyEstimate e;
  e.estimator = Estimator::ML;
  e.scale = Scale::Raw;
  e.value = has_closed_form_entropy(fitted.family) ? closed_form_entropy(fitted)
                                                   : de_ml_quadrature(fitted);
  if (fitted.n_fit > 0 && has_tabulated_ml_bias(fitted.family)) {
    e.bias_diag = ml_entropy_bias(fitted, fitted.n_fit);
  }
  return e;
}

double de_ml_quadrature(const FittedModel& model, double tol) {
  validate(model);
  constexpr double kTail = 1e-14;
  if (support_of(model.family) == Support::Positive) {
    const IntegrationRange r{std::log(quantile_of(model, kTail)),
                             std::log(quantile_of(model, 1.0 - kTail)), Scale::Log};
    // -f(e^y) ln f(e^y) e^y, written via ln f to stay finite in the tails.
    auto integrand = [&](double y) {
      const double lf = log_pdf(model, std::exp(y));
      if (lf == -std::numeric_limits<double>::infinity()) return 0.0;
      return -std::exp(lf + y) * lf;
    };
    return integrate(integrand, r, tol);
  }
  const double loc = quantile_of(model, 0.5);
  const double scale = 0.5 * (quantile_of(model, 0.75) - quantile_of(model, 0.25));
  const IntegrationRange r{std::asinh((quantile_of(model, kTail) - loc) / scale),
                           std::asinh((quantile_of(model, 1.0 - kTail) - loc) / scale), Scale::Raw};
  auto integrand = [&](double t) {
    const double x = loc + scale * std::sinh(t);
    return neg_f_log_f(log_pdf(model, x)) * scale * std::cosh(t);
  };
  return integrate(integrand, r, tol);
}

GaussianKde::GaussianKde(std::span<const double> data, double h)
    : sorted_(data.begin(), data.end()), h_(h) {
  if (sorted_.empty()) throw data_error("kernel density estimate needs data");
  if (!(h > 0.0) || !std::isfinite(h)) throw invalid_argument("bandwidth must be positive");
  std::sort(sorted_.begin(), sorted_.end());
  inv_h_ = 1.0 / h;
  norm_ = inv_h_ / (static_cast<double>(sorted_.size()) * std::sqrt(2.0 * std::numbers::pi));
}

double GaussianKde::operator()(double x) const {
  const auto lo = std::lower_bound(sorted_.begin(), sorted_.end(), x - kKernelCutoff * h_);
  const auto hi = std::upper_bound(lo, sorted_.end(), x + kKernelCutoff * h_);
  double s = 0.0;
  for (auto it = lo; it != hi; ++it) {
    const double u = (x - *it) * inv_h_;
    s += std::exp(-0.5 * u * u);
  }
  return s * norm_;
}

double kde_pdf(std::span<const double> data, double h, double x) {
  return GaussianKde(data, h)(x);
}

EntropyEstimate de_kde(std::span<const double> data, const BandwidthSpec& bw, Support support,
                       const KdeEntropyOptions& opts) {
  const Scale expected = support == Support::Positive ? Scale::Log : Scale::Raw;
  if (bw.scale != expected) {
    throw invalid_argument("bandwidth scale does not match the support (ln scale for positive data)");
  }
  for (double v : data) {
    if (!std::isfinite(v)) throw data_error("non-finite observation");
  }
  std::vector<double> work = support == Support::Positive ? log_transform(data)
                                                          : std::vector<double>(data.begin(), data.end());
  const IntegrationRange range = entropy_range(data, bw.h, support, opts.range_multiple);
  const GaussianKde kde(work, bw.h);
  auto integrand = [&](double y) {
    const double g = kde(y);
    return g > 0.0 ? -g * std::log(g) : 0.0;
  };
  double value = integrate(integrand, range, opts.abs_tol);
  if (support == Support::Positive) value += mean(work);

  EntropyEstimate e;
  e.value = value;
  e.estimator = Estimator::KDE;
  e.scale = expected;
  e.bandwidth = bw;
  return e;
}

double ml_entropy_bias(const FittedModel& fitted, std::size_t n) {
  validate(fitted);
  if (n < 2) throw invalid_argument("bias formulas need n >= 2");
  const double nn = static_cast<double>(n);
  switch (fitted.family) {
    case Family::Normal:
      return 0.5 * (special::digamma((nn - 1.0) / 2.0) - std::log(nn / 2.0));
    case Family::Exponential:
      return 1.0 / (2.0 * nn);
    case Family::Gamma: {
      const double a = fitted.theta[0];
      return 1.0 / (2.0 * nn * a) + (1.0 - a) / (2.0 * nn) * (1.0 - (a - 1.0) * special::trigamma(a));
    }
    case Family::Laplace:
      return -1.0 / (2.0 * nn);
    default:
      throw invalid_argument("no tabulated ML entropy bias for " +
                             std::string(info(fitted.family).display));
  }
}

double kde_smoothing_term(const FittedModel& fitted, double h) {
  validate(fitted);
  if (!(h > 0.0)) throw invalid_argument("bandwidth must be positive");
  const double h2 = h * h;
  switch (fitted.family) {
    case Family::Normal:
      return -h2 / (4.0 * fitted.theta[1]);
    case Family::Exponential:
      return -h2 / 4.0;
    case Family::Gamma:
      return -h2 / 4.0 * fitted.theta[0];
    case Family::Laplace:
      return -h2 / (4.0 * fitted.theta[1] * fitted.theta[1]);
    default:
      throw invalid_argument("no tabulated KDE smoothing bias for " +
                             std::string(info(fitted.family).display));
  }
}

double kde_variance_term(double h, std::size_t n) {
  if (!(h > 0.0) || n == 0) throw invalid_argument("variance term needs h > 0 and n > 0");
  return 1.0 / (4.0 * static_cast<double>(n) * h * std::sqrt(std::numbers::pi));
}

double kde_smoothing_bias(const FittedModel& fitted, double h, std::size_t n) {
  return kde_smoothing_term(fitted, h) + kde_variance_term(h, n);
}

double kde_smoothing_term_estimate(const FittedModel& fitted, double h, std::size_t n, double s2) {
  validate(fitted);
  if (!(h > 0.0) || n < 2) throw invalid_argument("estimate needs h > 0 and n >= 2");
  const double h2 = h * h;
  const double nn = static_cast<double>(n);
  switch (fitted.family) {
    case Family::Normal:
      return -h2 / (4.0 * fitted.theta[1]) * (nn - 3.0) / (nn - 1.0);
    case Family::Exponential:
      return -h2 / 4.0;
    case Family::Gamma: {
      const double a = fitted.theta[0];
      return -h2 / 4.0 * (a - (1.0 - a) / (2.0 * nn));
    }
    case Family::Laplace:
      if (!(s2 > 0.0)) throw invalid_argument("laplace estimate needs the unbiased sample variance");
      return -h2 / 2.0 * (1.0 - 5.0 / nn) / s2;
    default:
      throw invalid_argument("no tabulated KDE smoothing bias for " +
                             std::string(info(fitted.family).display));
  }
}

}  // namespace dde
