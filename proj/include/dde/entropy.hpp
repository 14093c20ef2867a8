#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dde/bandwidth.hpp"
#include "dde/families.hpp"
#include "dde/quadrature.hpp"

namespace dde {

enum class Estimator { ML, KDE };

/// A differential entropy value in nats and how it was produced.
/// ML estimates carry no bandwidth; KDE estimates always do.
struct EntropyEstimate {
  double value = 0.0;
  Estimator estimator = Estimator::ML;
  Scale scale = Scale::Raw;
  std::optional<BandwidthSpec> bandwidth;
  /// First-order bias of the estimator (report only; never subtracted).
  std::optional<double> bias_diag;

  bool operator==(const EntropyEstimate&) const = default;
};

/// Plug-in entropy of the fitted null. Uses the closed form when the family
/// has one, quadrature of -f ln f otherwise. When the family has a tabulated
/// ML bias and `fitted.n_fit > 0`, `bias_diag` is filled in.
EntropyEstimate de_ml(const FittedModel& fitted);

/// -integral f ln f of the model by adaptive quadrature: on ln x for positive
/// support, on a sinh-stretched axis for real support (handles heavy tails).
double de_ml_quadrature(const FittedModel& model, double tol = 1e-10);

/// Gaussian kernel density estimate over a fixed sample.
class GaussianKde {
 public:
  GaussianKde(std::span<const double> data, double h);

  double operator()(double x) const;
  double h() const noexcept { return h_; }
  std::size_t size() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
  double h_;
  double inv_h_;
  double norm_;
};

/// (n h)^-1 sum K((x - x_i) / h) with K the standard normal density.
double kde_pdf(std::span<const double> data, double h, double x);

struct KdeEntropyOptions {
  double abs_tol = 1e-8;
  double range_multiple = kRangeBandwidths;
};

/// -integral fhat ln fhat. For Positive support the KDE is built on y = ln x
/// and the result is -integral ghat ln ghat dy + mean(y).
EntropyEstimate de_kde(std::span<const double> data, const BandwidthSpec& bw, Support support,
                       const KdeEntropyOptions& opts = {});

/// Leading-order bias of the ML plug-in entropy for samples of size n
/// (Normal, Exponential, Gamma, Laplace).
double ml_entropy_bias(const FittedModel& fitted, std::size_t n);

/// Smoothing term of the KDE entropy bias on the working scale: Normal
/// -h^2/(4 sigma^2), ln-Exponential -h^2/4, ln-Gamma -alpha h^2/4,
/// Laplace -h^2/(4 b^2).
double kde_smoothing_term(const FittedModel& fitted, double h);

/// Variance term of the KDE entropy bias for the Gaussian kernel,
/// integral K^2 / (2 n h) = (4 n h sqrt(pi))^-1.
double kde_variance_term(double h, std::size_t n);

/// kde_smoothing_term + kde_variance_term.
double kde_smoothing_bias(const FittedModel& fitted, double h, std::size_t n);

/// Tabulated lower-order-bias estimator of the smoothing term, as printed:
/// Normal -h^2/(4 sigma^2) (n-3)/(n-1); ln-Exponential -h^2/4;
/// ln-Gamma -(h^2/4)(alpha - (1 - alpha)/(2n)); Laplace -(h^2/2)(1 - 5/n)/s2
/// where s2 is the unbiased sample variance (ignored for the other families).
double kde_smoothing_term_estimate(const FittedModel& fitted, double h, std::size_t n,
                                   double s2 = 0.0);

}  // namespace dde
