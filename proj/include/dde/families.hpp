#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dde/random.hpp"

namespace dde {

/// Parametric families. The first six are testable nulls (MLE + closed-form
/// entropy); the rest are data-generating alternatives for size/power runs.
///
/// Parameter vectors, in order:
///   Normal            (u, sigma2)
///   Exponential       (theta)            mean theta
///   Gamma             (alpha, beta)      shape, scale
///   Laplace           (u, b)             location, scale
///   Lognormal         (u, sigma2)        of ln X
///   GeneralizedGamma  (a, d, p)          Stacy: p x^(d-1) exp(-(x/a)^p) / (a^d Gamma(d/p))
///   Logistic          (u, s)
///   Cauchy            (u, s)
///   ScaledStudentT    (nu, s)            s * t(nu), centered at 0
///   Rayleigh          (sigma)
///   LogLogistic       (shape, scale)     F(x) = 1 / (1 + (x/scale)^-shape)
///   Lomax             (alpha, lambda)    shape, scale; F(x) = 1 - (1 + x/lambda)^-alpha
///   Weibull           (k, lambda)        shape, scale
///   InverseGaussian   (mu, lambda)       mean, shape
enum class Family {
  Normal,
  Exponential,
  Gamma,
  Laplace,
  Lognormal,
  GeneralizedGamma,
  Logistic,
  Cauchy,
  ScaledStudentT,
  Rayleigh,
  LogLogistic,
  Lomax,
  Weibull,
  InverseGaussian,
};

enum class Support { Real, Positive };
enum class Scale { Raw, Log };

struct FamilyInfo {
  Family family;
  std::string_view name;     // canonical CLI name, e.g. "gengamma"
  std::string_view display;  // e.g. "GeneralizedGamma"
  Support support;
  std::size_t n_params;
  bool testable;  // usable as a null hypothesis
};

const FamilyInfo& info(Family f);
std::span<const FamilyInfo> all_families();
std::span<const Family> testable_nulls();
std::optional<Family> parse_family(std::string_view name);

inline Support support_of(Family f) { return info(f).support; }
/// Scale on which the KDE and shape statistics work: ln for positive support.
inline Scale working_scale(Family f) {
  return support_of(f) == Support::Positive ? Scale::Log : Scale::Raw;
}

/// A family together with a parameter vector. Doubles as a generator spec
/// (n_fit = 0) for simulation alternatives.
struct FittedModel {
  Family family = Family::Normal;
  std::vector<double> theta;
  std::size_t n_fit = 0;

  bool operator==(const FittedModel&) const = default;
};

/// Validates parameter count and positivity; throws InvalidArgument.
void validate(const FittedModel& m);
FittedModel make_model(Family f, std::vector<double> theta);
std::string describe(const FittedModel& m);

double log_pdf(const FittedModel& m, double x);
double pdf(const FittedModel& m, double x);
/// Mean log-likelihood of the sample.
double mean_log_likelihood(const FittedModel& m, std::span<const double> x);

enum class FitMethod { MaximumLikelihood, MethodOfMoments };

/// Maximum likelihood (default) or explicit method-of-moments fit.
/// Throws Data errors for support violations / degenerate samples and Fit
/// errors when an iterative solver does not converge.
FittedModel fit(Family f, std::span<const double> data,
                FitMethod method = FitMethod::MaximumLikelihood);
inline FittedModel fit_mle(Family f, std::span<const double> data) { return fit(f, data); }

/// Minimum sample size accepted by `fit`.
std::size_t min_fit_size(Family f);

/// Shape of the Gamma MLE from s = ln(mean x) - mean(ln x) > 0, by Newton
/// iteration on ln(alpha) - digamma(alpha) = s.
double gamma_shape_mle(double log_gap);

double draw(const FittedModel& m, RandomStream& rng);
std::vector<double> sample(const FittedModel& m, std::size_t n, RandomStream& rng);
double standard_normal(RandomStream& rng);
double standard_gamma(double shape, RandomStream& rng);

bool has_closed_form_entropy(Family f);
/// Closed-form differential entropy (nats) of the maximum-entropy catalog.
double closed_form_entropy(const FittedModel& m);

/// Kurtosis implied by the model. Raw: of X. Log: of ln X (positive support only).
double null_kurtosis(const FittedModel& m, Scale scale);
/// Kurtosis on the family's working scale; this is what bandwidth selection uses.
inline double null_kurtosis(const FittedModel& m) { return null_kurtosis(m, working_scale(m.family)); }

/// Moments of X (infinite or NaN when they do not exist).
double mean_of(const FittedModel& m);
double variance_of(const FittedModel& m);
double quantile_of(const FittedModel& m, double prob);

/// Closed-form differential entropies of the maximum-entropy catalog rows that
/// have no Family tag.
namespace maxent {
double uniform(double a, double b);
double beta(double alpha, double beta);
double chi_square(double nu);
double erlang(int k, double lambda);
double gb2(double a, double b, double p, double q);
double pareto(double xm, double alpha);
}  // namespace maxent

}  // namespace dde
