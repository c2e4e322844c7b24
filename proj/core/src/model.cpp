#include "kgo/model.hpp"

#include <cmath>

namespace kgo {

ModelParams::ModelParams(double mass_, double omega_, double coupling_, double wavenumber_)
    : mass(mass_), omega(omega_), coupling(coupling_), wavenumber(wavenumber_) {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("ModelParams: mass must be > 0");
  // omega == 0 leaves the radial equation without bound states.
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("ModelParams: omega must be > 0");
  if (!std::isfinite(coupling) || !std::isfinite(wavenumber))
    throw std::invalid_argument("ModelParams: coupling and wavenumber must be finite");
}

QuantumNumbers::QuantumNumbers(int l_, int n_r_) : l(l_), n_r(n_r_) {
  if (n_r < 0) throw std::invalid_argument("QuantumNumbers: n_r must be >= 0");
}

int QuantumNumbers::principal() const { return 2 * n_r + std::abs(l); }

double BackgroundConfig::time_component() const {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SpaceLike>)
          return 0.0;
        else
          return v.a;
      },
      v_);
}

double BackgroundConfig::space_component() const {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TimeLike>)
          return 0.0;
        else
          return v.c;
      },
      v_);
}

char BackgroundConfig::case_label() const {
  switch (v_.index()) {
    case 0: return 'A';
    case 1: return 'B';
    default: return 'C';
  }
}

int ordering_sign(Prescription p) { return p == Prescription::Corrected ? 1 : -1; }

DispersionCoefficients dispersion_coefficients(const ModelParams& params,
                                               const BackgroundConfig& config) {
  const double a = config.time_component();
  const double c = config.space_component();
  const double g = params.coupling;
  const double k = params.wavenumber;
  return {1.0 + g * a * a, -2.0 * a * c * g * k, 1.0 - g * c * c};
}

double dispersion_rhs(const ModelParams& params, const DispersionCoefficients& coeffs,
                      int principal_n, Prescription presc) {
  if (principal_n < 0) throw std::invalid_argument("dispersion_rhs: n must be >= 0");
  // Integer shift keeps the prescription identity E_orig(n) = E_corr(n+2) exact.
  const int shift = principal_n + 1 - ordering_sign(presc);
  const double k = params.wavenumber;
  return params.mass * params.mass + coeffs.k_coeff * k * k +
         2.0 * params.mass * params.omega * shift;
}

double lambda_required(const ModelParams& params, const QuantumNumbers& qn) {
  return 2.0 * params.mass * params.omega * (2 * qn.n_r + std::abs(qn.l) + 1);
}

EnergyLevels solve_dispersion(const DispersionCoefficients& coeffs, double rhs,
                              double lambda) {
  EnergyLevels out;
  out.lambda = lambda;

  const double alpha = coeffs.alpha;
  const double beta = coeffs.beta;

  if (alpha == 0.0) {
    if (beta == 0.0)
      throw DegenerateDispersionError(
          "dispersion relation degenerates: alpha == 0 and beta == 0");
    out.e_plus = rhs / beta;
    out.degenerate = true;
    return out;
  }

  if (beta == 0.0) {
    // Exact branch symmetry e_plus == -e_minus.
    const double ratio = rhs / alpha;
    if (ratio < 0.0)
      throw ComplexEnergyError("dispersion relation has no real roots (E^2 < 0)");
    const double root = std::sqrt(ratio);
    out.e_plus = root;
    out.e_minus = -root;
    return out;
  }

  const double disc = beta * beta + 4.0 * alpha * rhs;
  if (disc < 0.0)
    throw ComplexEnergyError("dispersion relation has negative discriminant");
  const double q = -0.5 * (beta + std::copysign(std::sqrt(disc), beta));
  const double r1 = q / alpha;
  const double r2 = -rhs / q;  // product of roots = -rhs/alpha
  out.e_plus = std::max(r1, r2);
  out.e_minus = std::min(r1, r2);
  return out;
}

EnergyLevels energy_levels(const ModelParams& params, const BackgroundConfig& config,
                           Prescription presc, const QuantumNumbers& qn) {
  const DispersionCoefficients coeffs = dispersion_coefficients(params, config);
  const double rhs = dispersion_rhs(params, coeffs, qn.principal(), presc);
  return solve_dispersion(coeffs, rhs, lambda_required(params, qn));
}

}  // namespace kgo
