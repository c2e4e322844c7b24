#pragma once

#include <span>

#include "kgo/model.hpp"

namespace kgo {

/// Normalized radial eigenfunction
///   psi(r) = N r^{|l|+1/2} e^{-Mw r^2/2} L_{n_r}^{(|l|)}(Mw r^2).
/// The full mode is Psi = (psi(r)/sqrt(r)) e^{-iEt + il phi + ikz}; the
/// factor psi/sqrt(r) is exposed as profile().
struct RadialSolution {
  double norm;     // N > 0
  int l;           // magnetic quantum number
  int n_r;         // radial quantum number
  double m_omega;  // product M*w > 0

  double psi(double r) const;
  double operator()(double r) const { return psi(r); }

  /// psi(r)/sqrt(r) = N r^{|l|} e^{-Mw r^2/2} L_{n_r}^{(|l|)}(Mw r^2);
  /// finite at r = 0.
  double profile(double r) const;
  double profile_derivative(double r) const;
};

RadialSolution radial_wavefunction(const ModelParams& params, const QuantumNumbers& qn,
                                   double norm);

/// Scalar F with J^0 = F |Psi|^2 for a single mode:
///   F = [(1 + a^2 g) E - a c g k] / M,
/// which specializes to (1+a^2 g)E/M for a timelike background and E/M for
/// a spacelike one.
double charge_density_factor(const ModelParams& params, const BackgroundConfig& config,
                             double energy);

/// Normalization constant fixing the charge integral of the mode to +-1
/// (+1 on the positive-charge branch). Computed in log space so large n_r
/// and |l| survive. Throws ZeroDensityError when the mode carries no
/// charge, i.e. (1 + a^2 g) E - a c g k == 0.
double normalization_constant(const ModelParams& params, const BackgroundConfig& config,
                              const QuantumNumbers& qn, double energy);

/// One stationary mode of the decomposition
///   Psi = (psi(r)/sqrt(r)) e^{-iEt + il phi + ikz}.
struct ModeState {
  double energy;
  double wavenumber;
  RadialSolution radial;

  int l() const { return radial.l; }
};

struct SpacetimePoint {
  double t;
  double r;  // > 0
  double phi;
  double z;
};

/// Components of J^mu at a spacetime point, contravariant in cylindrical
/// coordinates (the divergence is d_t j0 + (1/r) d_r (r jr) + d_phi jphi
/// + d_z jz).
struct CurrentSample {
  double j0;
  double jr;
  double jphi;
  double jz;
};

/// Conserved current J^mu = -(1/M) Im[Psi* (d^mu Psi + g v^mu v^nu d_nu Psi)]
/// for one mode or a two-mode superposition, with analytic derivatives of
/// the ansatz. Indices raised with the (+,-,-,-) signature implied by the
/// case densities.
CurrentSample four_current(const ModelParams& params, const BackgroundConfig& config,
                           std::span<const ModeState> states, const SpacetimePoint& p);

}  // namespace kgo
