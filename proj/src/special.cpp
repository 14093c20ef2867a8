#include "dde/special.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "dde/error.hpp"

namespace dde::special {

namespace {
template <class F>
double guarded(const char* name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw numeric_error(std::string(name) + ": " + e.what());
  }
}
}  // namespace

double log_gamma(double x) {
  return guarded("log_gamma", [&] { return boost::math::lgamma(x); });
}

double digamma(double x) {
  return guarded("digamma", [&] { return boost::math::digamma(x); });
}

double trigamma(double x) {
  return guarded("trigamma", [&] { return boost::math::trigamma(x); });
}

double polygamma(int n, double x) {
  return guarded("polygamma", [&] { return boost::math::polygamma(n, x); });
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

}  // namespace dde::special
