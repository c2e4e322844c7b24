#include "kgo/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kgo {

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLnTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

double ln_gamma_lanczos(double x) {
  // Valid for x >= 0.5.
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i - 1);
  const double t = x + 6.5;
  return kHalfLnTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be > 0");
  // Shift arguments below 0.5 up by the recurrence Gamma(x) = Gamma(x+1)/x.
  if (x < 0.5) return ln_gamma_lanczos(x + 1.0) - std::log(x);
  return ln_gamma_lanczos(x);
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  if (!(alpha > -1.0)) throw std::invalid_argument("laguerre: alpha must be > -1");
  if (x < 0.0) throw std::invalid_argument("laguerre: x must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_derivative(int n, double alpha, double x) {
  if (n <= 0) return 0.0;
  return -laguerre(n - 1, alpha + 1.0, x);
}

QuadratureRule gauss_laguerre(int order, double alpha) {
  if (order < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
  if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must be > -1");

  QuadratureRule rule;
  rule.order = order;
  rule.alpha = alpha;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const double n = order;
  const double ln_weight_num = ln_gamma(order + alpha + 1.0) - ln_gamma(order + 1.0);

  double x = 0.0;
  for (int i = 0; i < order; ++i) {
    // Stroud-Secrest style initial guesses.
    if (i == 0) {
      x = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    } else if (i == 1) {
      x += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
    } else {
      const double ai = i - 1;
      x += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
           (x - rule.nodes[i - 2]) / (1.0 + 0.3 * alpha);
    }

    // Newton on L_order^{(alpha)}; derivative via the ratio identity
    //   L' = (order * L - (order+alpha) * L_{order-1}) / x.
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const double value = laguerre(order, alpha, x);
      const double below = order >= 1 ? laguerre(order - 1, alpha, x) : 0.0;
      const double slope = (order * value - (order + alpha) * below) / x;
      const double step = value / slope;
      x -= step;
      if (std::abs(step) <= 1e-14 * std::abs(x)) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw ConvergenceError("gauss_laguerre: node " + std::to_string(i) +
                             " of order " + std::to_string(order) + " did not converge");

    const double slope = (order * laguerre(order, alpha, x) -
                          (order + alpha) * laguerre(order - 1, alpha, x)) / x;
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(ln_weight_num - std::log(x)) / (slope * slope);
  }

  for (int i = 0; i < order; ++i) {
    if (!(rule.nodes[i] > 0.0) || !(rule.weights[i] > 0.0) ||
        (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])))
      throw ConvergenceError("gauss_laguerre: node sequence failed validity check");
  }
  return rule;
}

}  // namespace kgo
