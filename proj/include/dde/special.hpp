#pragma once

namespace dde::special {

inline constexpr double kEulerGamma = 0.57721566490153286061;

double log_gamma(double x);
double digamma(double x);
double trigamma(double x);
/// n-th derivative of the digamma function (n = 0 is digamma itself).
double polygamma(int n, double x);
double log_beta(double a, double b);

}  // namespace dde::special
