#pragma once

#include <vector>

#include "kgo/model.hpp"

namespace kgo {

/// Discretization of (0, r_max) for the finite-difference eigensolver.
struct GridSpec {
  double r_max;
  int points;  // interior nodes, >= 100

  GridSpec(double r_max, int points);
};

/// Default grid: r_max from the tail bound Mw r_max^2 / 2 >= 40 (wavefunction
/// tail below 1e-17 there), 4000 interior nodes.
GridSpec default_grid(const ModelParams& params, int points = 4000);

/// Numerically computed radial eigenvalues for one |l|, ascending.
/// observed_orders is filled by richardson_lambda only (per-eigenvalue
/// convergence order measured across the h, h/2, h/4 grids).
struct LambdaSpectrum {
  std::vector<double> lambdas;
  GridSpec grid;
  int l;
  std::vector<double> observed_orders;
};

/// Lowest `count` eigenvalues of the radial operator
///   -d^2/dr^2 + M^2 w^2 r^2 + (l^2 - 1/4)/r^2
/// on (0, r_max), independent of the series quantization condition.
///
/// Discretized in the regular variable u = psi/sqrt(r) (same spectrum;
/// -(1/r)(r u')' + l^2 u/r^2 + M^2 w^2 r^2 u) by second-order finite
/// volumes on the uniform half-shifted grid r_i = (i - 1/2) h, h = r_max /
/// points, symmetrized to tridiagonal form and solved by Sturm-sequence
/// bisection for the requested lowest eigenvalues only. Error O(h^2),
/// uniformly in l. The naive psi-form stencil with Dirichlet at r = 0
/// loses convergence for l = 0, where -1/(4 r^2) puts the operator in the
/// limit-circle case; the half-shifted finite-volume form does not.
///
/// Throws GridTooCoarseError when the estimated discretization error of the
/// largest requested eigenvalue exceeds 1% of its gap to the next level.
LambdaSpectrum solve_radial(const ModelParams& params, int l, int count,
                            const GridSpec& grid);

/// Richardson extrapolation across grids with spacing h, h/2 and h/4:
/// eliminates the O(h^2) term using the two finest grids and reports the
/// observed convergence order log2[(L_h - L_{h/2}) / (L_{h/2} - L_{h/4})]
/// per eigenvalue.
LambdaSpectrum richardson_lambda(const ModelParams& params, int l, int count,
                                 const GridSpec& grid);

/// Inverts alpha E^2 + beta E = lambda + M^2 + k_coeff k^2 - sigma 2Mw for E,
/// with the same root conventions and errors as energy_levels.
EnergyLevels energies_from_lambda(double lambda, const ModelParams& params,
                                  const BackgroundConfig& config, Prescription presc);

}  // namespace kgo
