#include "dde/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "dde/error.hpp"
#include "dde/sample_stats.hpp"

namespace dde {

namespace {

// Kronrod 15-point abscissae on [-1, 1] (non-negative half); odd indices are
// the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                      std::size_t& evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  evals += 15;
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  resk *= half;
  resg *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  // QUADPACK error heuristic.
  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
  return {a, b, resk, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower,
                                    double upper, const QuadratureOptions& opts) {
  QuadratureResult out;
  if (!(lower < upper) || !std::isfinite(lower) || !std::isfinite(upper)) {
    throw invalid_argument("integration range must be finite with lower < upper");
  }
  if (!(opts.abs_tol > 0.0)) throw invalid_argument("integration tolerance must be positive");

  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, lower, upper, out.evaluations);
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  std::size_t intervals = 1;

  while (total_err > opts.abs_tol && intervals < opts.max_intervals) {
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot bisect further
    heap.pop();
    Segment left = gauss_kronrod(f, worst.a, mid, out.evaluations);
    Segment right = gauss_kronrod(f, mid, worst.b, out.evaluations);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum from the segments to shed accumulated cancellation error.
  std::vector<Segment> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  total = 0.0;
  total_err = 0.0;
  for (const auto& s : segs) {
    total += s.value;
    total_err += s.error;
  }
  out.value = total;
  out.error = total_err;
  out.intervals = intervals;
  out.converged = total_err <= opts.abs_tol && std::isfinite(total);
  return out;
}

double integrate(const std::function<double(double)>& f, const IntegrationRange& range, double tol) {
  const QuadratureResult r = integrate_adaptive(f, range.lower, range.upper, {tol, std::size_t{1} << 15});
  if (!std::isfinite(r.value)) throw numeric_error("quadrature: integrand not finite on the range");
  if (!r.converged) {
    std::ostringstream os;
    os << "quadrature did not converge after " << r.intervals << " intervals (achieved error "
       << r.error << ", requested " << tol << ")";
    throw numeric_error(os.str());
  }
  return r.value;
}

IntegrationRange entropy_range(std::span<const double> data, double h, Support support,
                               double multiple) {
  if (data.size() < 2) throw data_error("entropy range needs at least two observations");
  if (!(h > 0.0) || !std::isfinite(h)) throw invalid_argument("bandwidth must be positive");
  std::vector<double> v = support == Support::Positive ? log_transform(data)
                                                       : std::vector<double>(data.begin(), data.end());
  std::sort(v.begin(), v.end());
  if (v.front() == v.back()) throw data_error("degenerate data: all observations identical");
  const double lo = quantile_sorted(v, 0.001) - multiple * h;
  const double hi = quantile_sorted(v, 0.999) + multiple * h;
  return {lo, hi, support == Support::Positive ? Scale::Log : Scale::Raw};
}

}  // namespace dde
