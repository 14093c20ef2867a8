#include "dde/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/distributions/cauchy.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/inverse_gaussian.hpp>
#include <boost/math/distributions/laplace.hpp>
#include <boost/math/distributions/logistic.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/distributions/weibull.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/minima.hpp>

#include "dde/error.hpp"
#include "dde/sample_stats.hpp"
#include "dde/special.hpp"

namespace dde {

namespace {

using std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * pi);

constexpr std::array<FamilyInfo, 14> kFamilies{{
    {Family::Normal, "normal", "Normal", Support::Real, 2, true},
    {Family::Exponential, "exponential", "Exponential", Support::Positive, 1, true},
    {Family::Gamma, "gamma", "Gamma", Support::Positive, 2, true},
    {Family::Laplace, "laplace", "LaPlace", Support::Real, 2, true},
    {Family::Lognormal, "lognormal", "Lognormal", Support::Positive, 2, true},
    {Family::GeneralizedGamma, "gengamma", "GeneralizedGamma", Support::Positive, 3, true},
    {Family::Logistic, "logistic", "Logistic", Support::Real, 2, false},
    {Family::Cauchy, "cauchy", "Cauchy", Support::Real, 2, false},
    {Family::ScaledStudentT, "student-t", "ScaledStudentT", Support::Real, 2, false},
    {Family::Rayleigh, "rayleigh", "Rayleigh", Support::Positive, 1, false},
    {Family::LogLogistic, "loglogistic", "LogLogistic", Support::Positive, 2, false},
    {Family::Lomax, "lomax", "Lomax", Support::Positive, 2, false},
    {Family::Weibull, "weibull", "Weibull", Support::Positive, 2, false},
    {Family::InverseGaussian, "invgauss", "InverseGaussian", Support::Positive, 2, false},
}};

constexpr std::array<Family, 6> kTestable{Family::Normal,    Family::Exponential,
                                          Family::Gamma,     Family::Laplace,
                                          Family::Lognormal, Family::GeneralizedGamma};

// Index of the parameters that must be strictly positive.
bool param_must_be_positive(Family f, std::size_t i) {
  switch (f) {
    case Family::Normal:
    case Family::Laplace:
    case Family::Lognormal:
    case Family::Logistic:
    case Family::Cauchy:
      return i == 1;
    default:
      return true;
  }
}

double log_sum_exp_mean(std::span<const double> v) {
  const double mx = *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += std::exp(x - mx);
  return mx + std::log(s / static_cast<double>(v.size()));
}

void require_fit_data(Family f, std::span<const double> x) {
  if (x.size() < min_fit_size(f)) {
    throw data_error("fit of " + std::string(info(f).name) + " needs at least " +
                     std::to_string(min_fit_size(f)) + " observations, got " +
                     std::to_string(x.size()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw data_error("non-finite observation");
    if (support_of(f) == Support::Positive && !(v > 0.0)) {
      throw data_error("support violation: " + std::string(info(f).name) +
                       " requires positive data, got " + std::to_string(v));
    }
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) throw data_error("degenerate data: all observations identical");
}

// Generalized Gamma by profile likelihood in p. For fixed p, y = x^p is
// Gamma(d/p, a^p), so the Gamma MLE on y gives (d, a) in closed form up to the
// one-dimensional shape equation; the remaining one-dimensional profile in
// ln p is scanned on a grid and refined with Brent's method.
FittedModel fit_generalized_gamma(std::span<const double> x) {
  const auto n = static_cast<double>(x.size());
  std::vector<double> lz = log_transform(x);
  double g = 0.0;
  for (double v : lz) g += v;
  g /= n;
  for (double& v : lz) v -= g;  // ln(x / geometric mean); mean is zero

  std::vector<double> scratch(lz.size());
  struct Profile {
    double loglik;
    double k;
    double log_theta;
  };
  auto profile = [&](double log_p) -> Profile {
    const double p = std::exp(log_p);
    for (std::size_t i = 0; i < lz.size(); ++i) scratch[i] = p * lz[i];
    const double s = log_sum_exp_mean(scratch);  // ln mean(y) - mean(ln y)
    if (!(s > 0.0) || !std::isfinite(s)) return {kNegInf, kNaN, kNaN};
    const double k = gamma_shape_mle(s);
    const double log_theta = s - std::log(k);
    const double ll = std::log(p) - k * log_theta - special::log_gamma(k) - k;
    return {ll, k, log_theta};
  };

  constexpr double kLo = -4.0;  // p in [0.018, 90]
  constexpr double kHi = 4.5;
  constexpr int kGrid = 69;
  std::vector<double> grid_ll(kGrid);
  int best = 0;
  for (int i = 0; i < kGrid; ++i) {
    const double t = kLo + (kHi - kLo) * i / (kGrid - 1);
    try {
      grid_ll[i] = profile(t).loglik;
    } catch (const Error&) {
      grid_ll[i] = kNegInf;
    }
    if (grid_ll[i] > grid_ll[best]) best = i;
  }
  if (!std::isfinite(grid_ll[best])) throw fit_error("generalized gamma: profile likelihood undefined");
  if (best == 0 || best == kGrid - 1) {
    throw fit_error("generalized gamma: no interior maximum in p on [exp(-4), exp(4.5)]");
  }
  const double step = (kHi - kLo) / (kGrid - 1);
  const double a = kLo + (best - 1) * step;
  const double b = kLo + (best + 1) * step;
  boost::uintmax_t iters = 200;
  const auto [t_star, neg_ll] = boost::math::tools::brent_find_minima(
      [&](double t) { return -profile(t).loglik; }, a, b, 40, iters);
  if (iters >= 200) throw fit_error("generalized gamma: Brent search did not converge");

  const Profile pr = profile(t_star);
  const double p = std::exp(t_star);
  const double d = pr.k * p;
  const double a_scale = std::exp(g + pr.log_theta / p);
  return FittedModel{Family::GeneralizedGamma, {a_scale, d, p}, x.size()};
}

FittedModel fit_mle_impl(Family f, std::span<const double> x) {
  const auto n = x.size();
  switch (f) {
    case Family::Normal: {
      const Moments m = central_moments(x);
      return {f, {m.mean, m.m2}, n};
    }
    case Family::Exponential:
      return {f, {mean(x)}, n};
    case Family::Gamma: {
      const double xbar = mean(x);
      double mlog = 0.0;
      for (double v : x) mlog += std::log(v);
      mlog /= static_cast<double>(n);
      const double s = std::log(xbar) - mlog;
      if (!(s > 0.0)) throw data_error("degenerate data for gamma fit");
      const double alpha = gamma_shape_mle(s);
      return {f, {alpha, xbar / alpha}, n};
    }
    case Family::Laplace: {
      std::vector<double> s(x.begin(), x.end());
      std::sort(s.begin(), s.end());
      const double med = s[(n - 1) / 2];  // lower median for even n
      double b = 0.0;
      for (double v : x) b += std::abs(v - med);
      b /= static_cast<double>(n);
      if (!(b > 0.0)) throw data_error("degenerate data for laplace fit");
      return {f, {med, b}, n};
    }
    case Family::Lognormal: {
      const Moments m = central_moments(log_transform(x));
      if (!(m.m2 > 0.0)) throw data_error("degenerate data for lognormal fit");
      return {f, {m.mean, m.m2}, n};
    }
    case Family::GeneralizedGamma:
      return fit_generalized_gamma(x);
    default:
      throw invalid_argument("no estimator for " + std::string(info(f).display) +
                             "; it is a simulation alternative only");
  }
}

FittedModel fit_moments_impl(Family f, std::span<const double> x) {
  const auto n = x.size();
  const Moments m = central_moments(x);
  switch (f) {
    case Family::Normal:
      return {f, {m.mean, m.m2}, n};
    case Family::Exponential:
      return {f, {m.mean}, n};
    case Family::Gamma:
      return {f, {m.mean * m.mean / m.m2, m.m2 / m.mean}, n};
    case Family::Laplace:
      return {f, {m.mean, std::sqrt(m.m2 / 2.0)}, n};
    case Family::Lognormal: {
      const double s2 = std::log1p(m.m2 / (m.mean * m.mean));
      return {f, {std::log(m.mean) - 0.5 * s2, s2}, n};
    }
    default:
      throw invalid_argument("no method-of-moments estimator for " +
                             std::string(info(f).display));
  }
}

}  // namespace

const FamilyInfo& info(Family f) { return kFamilies.at(static_cast<std::size_t>(f)); }
std::span<const FamilyInfo> all_families() { return kFamilies; }
std::span<const Family> testable_nulls() { return kTestable; }

std::optional<Family> parse_family(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& fi : kFamilies) {
    std::string disp(fi.display);
    std::transform(disp.begin(), disp.end(), disp.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (s == fi.name || s == disp) return fi.family;
  }
  if (s == "generalized-gamma" || s == "gg") return Family::GeneralizedGamma;
  if (s == "exp") return Family::Exponential;
  if (s == "t" || s == "scaled-t") return Family::ScaledStudentT;
  if (s == "inverse-gaussian" || s == "inversegaussian") return Family::InverseGaussian;
  return std::nullopt;
}

void validate(const FittedModel& m) {
  const FamilyInfo& fi = info(m.family);
  if (m.theta.size() != fi.n_params) {
    throw invalid_argument(std::string(fi.display) + " expects " + std::to_string(fi.n_params) +
                           " parameters, got " + std::to_string(m.theta.size()));
  }
  for (std::size_t i = 0; i < m.theta.size(); ++i) {
    if (!std::isfinite(m.theta[i])) throw invalid_argument("non-finite parameter");
    if (param_must_be_positive(m.family, i) && !(m.theta[i] > 0.0)) {
      throw invalid_argument("invalid parameter: " + describe(m) + " requires parameter " +
                             std::to_string(i + 1) + " > 0");
    }
  }
}

FittedModel make_model(Family f, std::vector<double> theta) {
  FittedModel m{f, std::move(theta), 0};
  validate(m);
  return m;
}

std::string describe(const FittedModel& m) {
  std::ostringstream os;
  os.precision(6);
  os << info(m.family).display << '(';
  for (std::size_t i = 0; i < m.theta.size(); ++i) os << (i ? ", " : "") << m.theta[i];
  os << ')';
  return os.str();
}

double log_pdf(const FittedModel& m, double x) {
  validate(m);
  const auto& t = m.theta;
  if (support_of(m.family) == Support::Positive && !(x > 0.0)) return kNegInf;
  switch (m.family) {
    case Family::Normal: {
      const double z = x - t[0];
      return -kLogSqrt2Pi - 0.5 * std::log(t[1]) - 0.5 * z * z / t[1];
    }
    case Family::Exponential:
      return -std::log(t[0]) - x / t[0];
    case Family::Gamma:
      return (t[0] - 1.0) * std::log(x) - x / t[1] - t[0] * std::log(t[1]) -
             special::log_gamma(t[0]);
    case Family::Laplace:
      return -std::log(2.0 * t[1]) - std::abs(x - t[0]) / t[1];
    case Family::Lognormal: {
      const double z = std::log(x) - t[0];
      return -kLogSqrt2Pi - 0.5 * std::log(t[1]) - std::log(x) - 0.5 * z * z / t[1];
    }
    case Family::GeneralizedGamma: {
      const double a = t[0], d = t[1], p = t[2];
      return std::log(p) - d * std::log(a) - special::log_gamma(d / p) + (d - 1.0) * std::log(x) -
             std::pow(x / a, p);
    }
    case Family::Logistic: {
      const double z = (x - t[0]) / t[1];
      // ln f = -z - ln s - 2 ln(1 + e^-z), written symmetric in z
      const double az = std::abs(z);
      return -az - std::log(t[1]) - 2.0 * std::log1p(std::exp(-az));
    }
    case Family::Cauchy: {
      const double z = (x - t[0]) / t[1];
      return -std::log(pi * t[1]) - std::log1p(z * z);
    }
    case Family::ScaledStudentT: {
      const double nu = t[0], s = t[1];
      const double z = x / s;
      return special::log_gamma(0.5 * (nu + 1.0)) - special::log_gamma(0.5 * nu) -
             0.5 * std::log(nu * pi) - std::log(s) - 0.5 * (nu + 1.0) * std::log1p(z * z / nu);
    }
    case Family::Rayleigh: {
      const double s2 = t[0] * t[0];
      return std::log(x) - std::log(s2) - 0.5 * x * x / s2;
    }
    case Family::LogLogistic: {
      const double b = t[0], a = t[1];
      const double lr = std::log(x / a);
      const double u = b * lr;
      // ln f = ln b - ln a + (b-1) ln(x/a) - 2 ln(1 + (x/a)^b)
      const double l1p = u > 0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
      return std::log(b) - std::log(a) + (b - 1.0) * lr - 2.0 * l1p;
    }
    case Family::Lomax:
      return std::log(t[0] / t[1]) - (t[0] + 1.0) * std::log1p(x / t[1]);
    case Family::Weibull: {
      const double k = t[0], lam = t[1];
      return std::log(k / lam) + (k - 1.0) * std::log(x / lam) - std::pow(x / lam, k);
    }
    case Family::InverseGaussian: {
      const double mu = t[0], lam = t[1];
      const double z = x - mu;
      return 0.5 * std::log(lam / (2.0 * pi * x * x * x)) - lam * z * z / (2.0 * mu * mu * x);
    }
  }
  return kNaN;
}

double pdf(const FittedModel& m, double x) { return std::exp(log_pdf(m, x)); }

double mean_log_likelihood(const FittedModel& m, std::span<const double> x) {
  if (x.empty()) throw data_error("log-likelihood of empty sample");
  double s = 0.0;
  for (double v : x) s += log_pdf(m, v);
  return s / static_cast<double>(x.size());
}

std::size_t min_fit_size(Family f) { return info(f).n_params + 1; }

namespace {

// ln(a) - digamma(a) and its derivative. The direct difference cancels badly
// for large a, so the asymptotic series takes over there.
std::pair<double, double> log_minus_digamma(double a) {
  if (a < 8.0) return {std::log(a) - special::digamma(a), 1.0 / a - special::trigamma(a)};
  const double r = 1.0 / a;
  const double r2 = r * r;
  const double f = r * (0.5 + r * (1.0 / 12.0 + r2 * (-1.0 / 120.0 + r2 * (1.0 / 252.0 +
                   r2 * (-1.0 / 240.0 + r2 * (1.0 / 132.0))))));
  const double fp = -r2 * (0.5 + r * (1.0 / 6.0 + r2 * (-1.0 / 30.0 + r2 * (1.0 / 42.0 +
                    r2 * (-1.0 / 30.0 + r2 * (10.0 / 132.0))))));
  return {f, fp};
}

}  // namespace

double gamma_shape_mle(double log_gap) {
  const double s = log_gap;
  if (!(s > 0.0) || !std::isfinite(s)) throw data_error("gamma shape equation needs ln(mean) > mean(ln)");
  // Moment-type starting value (Minka 2002), already within a few percent.
  double alpha = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
  for (int it = 0; it < 100; ++it) {
    const auto [g, gp] = log_minus_digamma(alpha);
    const double f = g - s;
    double next = alpha - f / gp;
    if (!(next > 0.0)) next = 0.5 * alpha;
    if (std::abs(next - alpha) <= 1e-12 * alpha || std::abs(f) <= 1e-15 * s) return next;
    alpha = next;
  }
  throw fit_error("gamma shape Newton iteration did not converge in 100 steps");
}

FittedModel fit(Family f, std::span<const double> data, FitMethod method) {
  if (!info(f).testable) {
    throw invalid_argument("no estimator for " + std::string(info(f).display) +
                           "; it is a simulation alternative only");
  }
  require_fit_data(f, data);
  FittedModel m = method == FitMethod::MaximumLikelihood ? fit_mle_impl(f, data)
                                                         : fit_moments_impl(f, data);
  for (double v : m.theta) {
    if (!std::isfinite(v)) throw fit_error("fit produced a non-finite parameter");
  }
  try {
    validate(m);
  } catch (const Error& e) {
    throw fit_error(std::string("fit left the parameter space: ") + e.what());
  }
  return m;
}

double standard_normal(RandomStream& rng) {
  // Box-Muller; one variate per pair of uniforms keeps the stream stateless.
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
}

double standard_gamma(double shape, RandomStream& rng) {
  if (shape < 1.0) {
    // Boost to shape + 1 and scale by U^(1/shape).
    const double u = rng.uniform();
    return standard_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia and Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double z, v;
    do {
      z = standard_normal(rng);
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double draw(const FittedModel& m, RandomStream& rng) {
  const auto& t = m.theta;
  switch (m.family) {
    case Family::Normal:
      return t[0] + std::sqrt(t[1]) * standard_normal(rng);
    case Family::Exponential:
      return -t[0] * std::log(rng.uniform());
    case Family::Gamma:
      return t[1] * standard_gamma(t[0], rng);
    case Family::Laplace: {
      const double u = rng.uniform() - 0.5;
      return t[0] - t[1] * std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
    }
    case Family::Lognormal:
      return std::exp(t[0] + std::sqrt(t[1]) * standard_normal(rng));
    case Family::GeneralizedGamma:
      return t[0] * std::pow(standard_gamma(t[1] / t[2], rng), 1.0 / t[2]);
    case Family::Logistic: {
      const double u = rng.uniform();
      return t[0] + t[1] * std::log(u / (1.0 - u));
    }
    case Family::Cauchy:
      return t[0] + t[1] * std::tan(pi * (rng.uniform() - 0.5));
    case Family::ScaledStudentT: {
      const double z = standard_normal(rng);
      const double chi2 = 2.0 * standard_gamma(0.5 * t[0], rng);
      return t[1] * z / std::sqrt(chi2 / t[0]);
    }
    case Family::Rayleigh:
      return t[0] * std::sqrt(-2.0 * std::log(rng.uniform()));
    case Family::LogLogistic: {
      const double u = rng.uniform();
      return t[1] * std::pow(u / (1.0 - u), 1.0 / t[0]);
    }
    case Family::Lomax:
      return t[1] * std::expm1(-std::log(rng.uniform()) / t[0]);
    case Family::Weibull:
      return t[1] * std::pow(-std::log(rng.uniform()), 1.0 / t[0]);
    case Family::InverseGaussian: {
      // Michael, Schucany and Haas (1976).
      const double mu = t[0], lam = t[1];
      const double z = standard_normal(rng);
      const double y = z * z;
      const double x = mu + mu * mu * y / (2.0 * lam) -
                       mu / (2.0 * lam) * std::sqrt(4.0 * mu * lam * y + mu * mu * y * y);
      return rng.uniform() <= mu / (mu + x) ? x : mu * mu / x;
    }
  }
  return kNaN;
}

std::vector<double> sample(const FittedModel& m, std::size_t n, RandomStream& rng) {
  if (n == 0) throw invalid_argument("sample size must be at least 1");
  validate(m);
  std::vector<double> out(n);
  for (auto& v : out) v = draw(m, rng);
  return out;
}

bool has_closed_form_entropy(Family f) {
  switch (f) {
    case Family::ScaledStudentT:
    case Family::LogLogistic:
    case Family::Lomax:
    case Family::InverseGaussian:
      return false;
    default:
      return true;
  }
}

double closed_form_entropy(const FittedModel& m) {
  validate(m);
  const auto& t = m.theta;
  using special::digamma;
  using special::log_gamma;
  switch (m.family) {
    case Family::Normal:
      return 0.5 * std::log(2.0 * pi * std::numbers::e * t[1]);
    case Family::Exponential:
      return 1.0 + std::log(t[0]);
    case Family::Gamma:
      return std::log(t[1]) + log_gamma(t[0]) + (1.0 - t[0]) * digamma(t[0]) + t[0];
    case Family::Laplace:
      return 1.0 + std::log(2.0 * t[1]);
    case Family::Lognormal:
      return t[0] + 0.5 * std::log(2.0 * pi * std::numbers::e * t[1]);
    case Family::GeneralizedGamma: {
      const double a = t[0], d = t[1], p = t[2];
      const double k = d / p;
      return std::log(a / p) + log_gamma(k) + k + (1.0 - d) / p * digamma(k);
    }
    case Family::Logistic:
      return std::log(t[1]) + 2.0;
    case Family::Cauchy:
      return std::log(4.0 * pi * t[1]);
    case Family::Rayleigh:
      return 1.0 + std::log(t[0] / std::numbers::sqrt2) + 0.5 * special::kEulerGamma;
    case Family::Weibull: {
      const double k = t[0], lam = t[1];
      return (k - 1.0) / k * special::kEulerGamma + std::log(lam / k) + 1.0;
    }
    default:
      throw invalid_argument("no closed-form entropy for " + std::string(info(m.family).display));
  }
}

double null_kurtosis(const FittedModel& m, Scale scale) {
  validate(m);
  const auto& t = m.theta;
  // Kurtosis of ln G for G ~ Gamma(k): 3 + psi'''(k) / psi'(k)^2.
  auto log_gamma_kurtosis = [](double k) {
    const double tg = special::trigamma(k);
    return 3.0 + special::polygamma(3, k) / (tg * tg);
  };
  if (scale == Scale::Log) {
    switch (m.family) {
      case Family::Exponential:
        return log_gamma_kurtosis(1.0);
      case Family::Gamma:
        return log_gamma_kurtosis(t[0]);
      case Family::Lognormal:
        return 3.0;
      case Family::GeneralizedGamma:
        return log_gamma_kurtosis(t[1] / t[2]);
      default:
        throw invalid_argument("log-scale kurtosis needs a positive-support null, got " +
                               std::string(info(m.family).display));
    }
  }
  switch (m.family) {
    case Family::Normal:
      return 3.0;
    case Family::Laplace:
      return 6.0;
    case Family::Exponential:
      return 9.0;
    case Family::Gamma:
      return 3.0 + 6.0 / t[0];
    case Family::Lognormal: {
      const double s2 = t[1];
      return std::exp(4 * s2) + 2 * std::exp(3 * s2) + 3 * std::exp(2 * s2) - 3.0;
    }
    case Family::GeneralizedGamma: {
      // Raw moments E[(X/a)^r] = Gamma((d + r)/p) / Gamma(d/p).
      const double d = t[1], p = t[2];
      auto mom = [&](double r) { return std::exp(special::log_gamma((d + r) / p) - special::log_gamma(d / p)); };
      const double m1 = mom(1), m2 = mom(2), m3 = mom(3), m4 = mom(4);
      const double var = m2 - m1 * m1;
      const double c4 = m4 - 4 * m3 * m1 + 6 * m2 * m1 * m1 - 3 * m1 * m1 * m1 * m1;
      return c4 / (var * var);
    }
    default:
      throw invalid_argument("null kurtosis is defined for testable nulls only, got " +
                             std::string(info(m.family).display));
  }
}

double mean_of(const FittedModel& m) {
  validate(m);
  const auto& t = m.theta;
  switch (m.family) {
    case Family::Normal:
    case Family::Laplace:
    case Family::Logistic:
      return t[0];
    case Family::Exponential:
      return t[0];
    case Family::Gamma:
      return t[0] * t[1];
    case Family::Lognormal:
      return std::exp(t[0] + 0.5 * t[1]);
    case Family::GeneralizedGamma:
      return t[0] * std::exp(special::log_gamma((t[1] + 1) / t[2]) - special::log_gamma(t[1] / t[2]));
    case Family::Cauchy:
      return kNaN;
    case Family::ScaledStudentT:
      return t[0] > 1.0 ? 0.0 : kNaN;
    case Family::Rayleigh:
      return t[0] * std::sqrt(pi / 2.0);
    case Family::LogLogistic: {
      if (t[0] <= 1.0) return kInf;
      const double b = pi / t[0];
      return t[1] * b / std::sin(b);
    }
    case Family::Lomax:
      return t[0] > 1.0 ? t[1] / (t[0] - 1.0) : kInf;
    case Family::Weibull:
      return t[1] * std::tgamma(1.0 + 1.0 / t[0]);
    case Family::InverseGaussian:
      return t[0];
  }
  return kNaN;
}

double variance_of(const FittedModel& m) {
  validate(m);
  const auto& t = m.theta;
  switch (m.family) {
    case Family::Normal:
      return t[1];
    case Family::Exponential:
      return t[0] * t[0];
    case Family::Gamma:
      return t[0] * t[1] * t[1];
    case Family::Laplace:
      return 2.0 * t[1] * t[1];
    case Family::Lognormal:
      return std::expm1(t[1]) * std::exp(2.0 * t[0] + t[1]);
    case Family::GeneralizedGamma: {
      const double a = t[0], d = t[1], p = t[2];
      const double lg = special::log_gamma(d / p);
      const double m1 = std::exp(special::log_gamma((d + 1) / p) - lg);
      const double m2 = std::exp(special::log_gamma((d + 2) / p) - lg);
      return a * a * (m2 - m1 * m1);
    }
    case Family::Logistic:
      return t[1] * t[1] * pi * pi / 3.0;
    case Family::Cauchy:
      return kNaN;
    case Family::ScaledStudentT:
      return t[0] > 2.0 ? t[1] * t[1] * t[0] / (t[0] - 2.0) : kInf;
    case Family::Rayleigh:
      return (4.0 - pi) / 2.0 * t[0] * t[0];
    case Family::LogLogistic: {
      if (t[0] <= 2.0) return kInf;
      const double b = pi / t[0];
      return t[1] * t[1] * (2.0 * b / std::sin(2.0 * b) - b * b / (std::sin(b) * std::sin(b)));
    }
    case Family::Lomax: {
      const double a = t[0], l = t[1];
      return a > 2.0 ? l * l * a / ((a - 1.0) * (a - 1.0) * (a - 2.0)) : kInf;
    }
    case Family::Weibull: {
      const double g1 = std::tgamma(1.0 + 1.0 / t[0]);
      return t[1] * t[1] * (std::tgamma(1.0 + 2.0 / t[0]) - g1 * g1);
    }
    case Family::InverseGaussian:
      return t[0] * t[0] * t[0] / t[1];
  }
  return kNaN;
}

double quantile_of(const FittedModel& m, double prob) {
  validate(m);
  if (!(prob > 0.0 && prob < 1.0)) throw invalid_argument("quantile probability must be in (0, 1)");
  namespace bm = boost::math;
  const auto& t = m.theta;
  switch (m.family) {
    case Family::Normal:
      return bm::quantile(bm::normal(t[0], std::sqrt(t[1])), prob);
    case Family::Exponential:
      return -t[0] * std::log1p(-prob);
    case Family::Gamma:
      return bm::quantile(bm::gamma_distribution<>(t[0], t[1]), prob);
    case Family::Laplace:
      return bm::quantile(bm::laplace(t[0], t[1]), prob);
    case Family::Lognormal:
      return bm::quantile(bm::lognormal(t[0], std::sqrt(t[1])), prob);
    case Family::GeneralizedGamma:
      return t[0] * std::pow(bm::gamma_p_inv(t[1] / t[2], prob), 1.0 / t[2]);
    case Family::Logistic:
      return bm::quantile(bm::logistic(t[0], t[1]), prob);
    case Family::Cauchy:
      return bm::quantile(bm::cauchy(t[0], t[1]), prob);
    case Family::ScaledStudentT:
      return t[1] * bm::quantile(bm::students_t(t[0]), prob);
    case Family::Rayleigh:
      return t[0] * std::sqrt(-2.0 * std::log1p(-prob));
    case Family::LogLogistic:
      return t[1] * std::pow(prob / (1.0 - prob), 1.0 / t[0]);
    case Family::Lomax:
      return t[1] * std::expm1(-std::log1p(-prob) / t[0]);
    case Family::Weibull:
      return bm::quantile(bm::weibull(t[0], t[1]), prob);
    case Family::InverseGaussian:
      return bm::quantile(bm::inverse_gaussian(t[0], t[1]), prob);
  }
  return kNaN;
}

namespace maxent {

double uniform(double a, double b) {
  if (!(b > a)) throw invalid_argument("uniform entropy needs b > a");
  return std::log(b - a);
}

double beta(double alpha, double beta) {
  if (!(alpha > 0.0 && beta > 0.0)) throw invalid_argument("beta entropy needs positive shapes");
  using special::digamma;
  const double dab = digamma(alpha + beta);
  return special::log_beta(alpha, beta) - (alpha - 1.0) * (digamma(alpha) - dab) -
         (beta - 1.0) * (digamma(beta) - dab);
}

double chi_square(double nu) {
  if (!(nu > 0.0)) throw invalid_argument("chi-square entropy needs nu > 0");
  const double h = nu / 2.0;
  return std::log(2.0) + special::log_gamma(h) + (1.0 - h) * special::digamma(h) + h;
}

double erlang(int k, double lambda) {
  if (k < 1 || !(lambda > 0.0)) throw invalid_argument("erlang entropy needs k >= 1, lambda > 0");
  const double kk = k;
  return (1.0 - kk) * special::digamma(kk) + special::log_gamma(kk) - std::log(lambda) + kk;
}

double gb2(double a, double b, double p, double q) {
  if (!(a > 0 && b > 0 && p > 0 && q > 0)) throw invalid_argument("GB2 entropy needs positive parameters");
  using special::digamma;
  return std::log(b / a) + special::log_beta(p, q) + (p + q) * digamma(p + q) -
         (p - 1.0 / a) * digamma(p) - (q + 1.0 / a) * digamma(q);
}

double pareto(double xm, double alpha) {
  if (!(xm > 0.0 && alpha > 0.0)) throw invalid_argument("pareto entropy needs positive parameters");
  return std::log(xm / alpha) + 1.0 + 1.0 / alpha;
}

}  // namespace maxent

}  // namespace dde
