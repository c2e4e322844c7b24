#pragma once

#include <utility>
#include <vector>

#include "kgo/errors.hpp"

namespace kgo {

/// Natural log of Gamma(x) for x > 0 (Lanczos approximation).
/// Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), evaluated by the
/// forward three-term recurrence
///   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
/// from L_0 = 1, L_1 = 1 + alpha - x.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^{(alpha)}(x) = -L_{n-1}^{(alpha+1)}(x), with L_{-1} == 0.
double laguerre_derivative(int n, double alpha, double x);

/// Gauss-Laguerre rule for integrals of x^alpha e^{-x} f(x) over (0, inf).
/// Exact for polynomial f of degree <= 2*order - 1.
struct QuadratureRule {
  int order;
  double alpha;
  std::vector<double> nodes;    // ascending, strictly positive
  std::vector<double> weights;  // strictly positive, sum = Gamma(alpha+1)

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int i = 0; i < order; ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Nodes are the roots of L_order^{(alpha)}, located by Newton iteration
/// from the classical asymptotic initial guesses and polished to 1e-14
/// relative; weights from the derivative formula
///   w_i = Gamma(order+alpha+1) / (order! x_i L'(x_i)^2).
/// Throws ConvergenceError if a node fails to converge.
QuadratureRule gauss_laguerre(int order, double alpha);

}  // namespace kgo
