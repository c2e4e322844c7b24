// Independent numerical oracles used only by the tests. Nothing here may
// call into the code paths under test: integrals are brute-force composite
// Simpson, roots come from plain bisection, and Laguerre values from the
// explicit coefficient sum rather than the recurrence.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracles {

// Composite Simpson on [a, b]; n must be even.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2 != 0) throw std::invalid_argument("simpson: n must be even");
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Gamma(x) for x >= 0.5 from the Euler integral after t = u^2:
//   Gamma(x) = 2 int_0^inf u^{2x-1} e^{-u^2} du.
inline double gamma_by_euler_integral(double x) {
  return 2.0 * simpson([x](double u) {
           return u == 0.0 ? 0.0 : std::pow(u, 2.0 * x - 1.0) * std::exp(-u * u);
         },
         0.0, 9.0, 200000);
}

// Plain bisection; f(lo) and f(hi) must bracket a root.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-15) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (flo * f(hi) > 0.0) throw std::invalid_argument("bisect: no bracket");
  for (int i = 0; i < 200 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    (flo * fm < 0.0 ? hi : lo) = mid;
    if (hi == lo) break;
  }
  return 0.5 * (lo + hi);
}

// L_n^{(alpha)}(x) from the explicit sum
//   sum_j (-1)^j binom(n+alpha, n-j) x^j / j!
// with the binomial built by direct products. Adequate for small n.
inline double laguerre_by_series(int n, double alpha, double x) {
  double acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    double binom = 1.0;
    for (int i = 1; i <= n - j; ++i) binom *= (alpha + j + i) / i;
    double term = binom;
    for (int i = 1; i <= j; ++i) term *= -x / i;
    acc += term;
  }
  return acc;
}

}  // namespace oracles
