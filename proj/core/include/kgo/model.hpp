#pragma once

#include <optional>
#include <variant>

#include "kgo/errors.hpp"

namespace kgo {

/// Physical constants of the oscillator, natural units.
struct ModelParams {
  double mass;        // M > 0
  double omega;       // oscillator frequency, > 0
  double coupling;    // symmetry-breaking coupling g, any sign
  double wavenumber;  // longitudinal wavenumber k

  ModelParams(double mass, double omega, double coupling, double wavenumber);
};

struct QuantumNumbers {
  int l;    // magnetic quantum number; only |l| enters the radial problem
  int n_r;  // radial quantum number, >= 0

  QuantumNumbers(int l, int n_r);

  /// Principal quantum number n = 2 n_r + |l|.
  int principal() const;
};

/// Background vector configurations. The components not named by a
/// configuration are identically zero, so all three reduce to one pair
/// (v^0, v^z) = (a, c); formulas are evaluated uniformly in (a, c), which
/// makes Mixed{a, 0} bit-identical to TimeLike{a} and Mixed{0, c} to
/// SpaceLike{c}.
struct TimeLike {
  double a;  // v^0
};
struct SpaceLike {
  double c;  // v^z
};
struct Mixed {
  double a;  // v^0
  double c;  // v^z
};

class BackgroundConfig {
 public:
  BackgroundConfig(TimeLike v) : v_(v) {}
  BackgroundConfig(SpaceLike v) : v_(v) {}
  BackgroundConfig(Mixed v) : v_(v) {}

  double time_component() const;   // v^0
  double space_component() const;  // v^z
  char case_label() const;         // 'A' timelike, 'B' spacelike, 'C' mixed

 private:
  std::variant<TimeLike, SpaceLike, Mixed> v_;
};

/// Operator ordering of the oscillator substitution. With momenta acting
/// first, (p + iMwr).(p - iMwr) = p^2 + M^2 w^2 r^2 - 2Mw in the transverse
/// plane (i[r_j, p_j] summed over two components), so the wave operator
/// carries +2Mw; the reversed ordering flips the constant to -2Mw.
enum class Prescription { Corrected, Original };

/// +1 for Corrected, -1 for Original.
int ordering_sign(Prescription p);

/// Coefficients of the quadratic dispersion relation
///   alpha E^2 + beta E = M^2 + k_coeff k^2 + 2 M w (n + 1 - sigma).
struct DispersionCoefficients {
  double alpha;    // 1 + g a^2
  double beta;     // -2 a c g k; nonzero only for mixed backgrounds
  double k_coeff;  // 1 - g c^2
};

/// Both branches of the dispersion relation. When alpha == 0 the relation
/// is linear: the single root is stored in e_plus, e_minus is absent and
/// degenerate is set.
struct EnergyLevels {
  std::optional<double> e_plus;   // larger root
  std::optional<double> e_minus;  // smaller root
  double lambda = 0.0;            // radial eigenvalue the levels descend from
  bool degenerate = false;
};

DispersionCoefficients dispersion_coefficients(const ModelParams& params,
                                               const BackgroundConfig& config);

/// Right-hand side M^2 + k_coeff k^2 + 2 M w (n + 1 - sigma) of the
/// dispersion relation at principal quantum number n.
double dispersion_rhs(const ModelParams& params, const DispersionCoefficients& coeffs,
                      int principal_n, Prescription presc);

/// Radial eigenvalue required by the termination of the series solution:
///   Lambda = 2 M w (2 n_r + |l| + 1).
double lambda_required(const ModelParams& params, const QuantumNumbers& qn);

/// Roots of alpha E^2 + beta E - rhs = 0, ordered e_plus >= e_minus, by the
/// cancellation-free formulation (larger-magnitude root first, the other
/// from the product of roots). Throws ComplexEnergyError on a negative
/// discriminant and DegenerateDispersionError when alpha == beta == 0.
EnergyLevels solve_dispersion(const DispersionCoefficients& coeffs, double rhs,
                              double lambda);

EnergyLevels energy_levels(const ModelParams& params, const BackgroundConfig& config,
                           Prescription presc, const QuantumNumbers& qn);

}  // namespace kgo
