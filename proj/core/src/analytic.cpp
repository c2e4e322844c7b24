#include "kgo/analytic.hpp"

#include <cmath>
#include <complex>

#include "kgo/specfun.hpp"

namespace kgo {

double RadialSolution::psi(double r) const {
  if (r == 0.0) return 0.0;  // r^{|l|+1/2} with positive exponent
  const double x = m_omega * r * r;
  const int al = std::abs(l);
  return norm * std::pow(r, al + 0.5) * std::exp(-0.5 * x) * laguerre(n_r, al, x);
}

double RadialSolution::profile(double r) const {
  const double x = m_omega * r * r;
  const int al = std::abs(l);
  const double power = al == 0 ? 1.0 : std::pow(r, al);
  return norm * power * std::exp(-0.5 * x) * laguerre(n_r, al, x);
}

double RadialSolution::profile_derivative(double r) const {
  const double x = m_omega * r * r;
  const int al = std::abs(l);
  const double lag = laguerre(n_r, al, x);
  const double dlag = laguerre_derivative(n_r, al, x);
  // d/dr [r^a e^{-x/2} L(x)] with dx/dr = 2 m_omega r.
  const double power_term = al == 0 ? 0.0 : al * std::pow(r, al - 1) * lag;
  const double power = al == 0 ? 1.0 : std::pow(r, al);
  return norm * std::exp(-0.5 * x) *
         (power_term + power * (2.0 * m_omega * r) * (dlag - 0.5 * lag));
}

RadialSolution radial_wavefunction(const ModelParams& params, const QuantumNumbers& qn,
                                   double norm) {
  if (!(norm > 0.0)) throw std::invalid_argument("radial_wavefunction: norm must be > 0");
  return {norm, qn.l, qn.n_r, params.mass * params.omega};
}

double charge_density_factor(const ModelParams& params, const BackgroundConfig& config,
                             double energy) {
  const double a = config.time_component();
  const double c = config.space_component();
  const double g = params.coupling;
  return ((1.0 + a * a * g) * energy - a * c * g * params.wavenumber) / params.mass;
}

double normalization_constant(const ModelParams& params, const BackgroundConfig& config,
                              const QuantumNumbers& qn, double energy) {
  const double a = config.time_component();
  const double c = config.space_component();
  const double g = params.coupling;
  const double denom =
      std::abs((1.0 + a * a * g) * energy - a * c * g * params.wavenumber);
  if (denom == 0.0)
    throw ZeroDensityError(
        "mode carries no charge ((1 + a^2 g) E - a c g k == 0): cannot normalize");

  const int al = std::abs(qn.l);
  const double ln_norm_sq = std::log(2.0) + (al + 2) * std::log(params.mass) +
                            (al + 1) * std::log(params.omega) + ln_gamma(qn.n_r + 1.0) -
                            std::log(denom) - ln_gamma(al + qn.n_r + 1.0);
  return std::exp(0.5 * ln_norm_sq);
}

CurrentSample four_current(const ModelParams& params, const BackgroundConfig& config,
                           std::span<const ModeState> states, const SpacetimePoint& p) {
  if (states.empty() || states.size() > 2)
    throw std::invalid_argument("four_current: one or two modes required");
  if (!(p.r > 0.0)) throw std::invalid_argument("four_current: r must be > 0");

  using cplx = std::complex<double>;
  const cplx I(0.0, 1.0);
  const double a = config.time_component();
  const double c = config.space_component();
  const double g = params.coupling;

  cplx value(0.0, 0.0), d_t(0.0, 0.0), d_r(0.0, 0.0), d_phi(0.0, 0.0), d_z(0.0, 0.0);
  for (const ModeState& s : states) {
    const cplx phase =
        std::exp(I * (-s.energy * p.t + double(s.l()) * p.phi + s.wavenumber * p.z));
    const cplx mode = s.radial.profile(p.r) * phase;
    value += mode;
    d_t += -I * s.energy * mode;
    d_r += s.radial.profile_derivative(p.r) * phase;
    d_phi += I * double(s.l()) * mode;
    d_z += I * s.wavenumber * mode;
  }

  const cplx dir = a * d_t + c * d_z;  // v^nu d_nu Psi
  const cplx bar = std::conj(value);
  const double inv_m = 1.0 / params.mass;

  CurrentSample out;
  // d^t = +d_t, d^r = -d_r, d^phi = -(1/r^2) d_phi, d^z = -d_z.
  out.j0 = -inv_m * std::imag(bar * (d_t + g * a * dir));
  out.jr = inv_m * std::imag(bar * d_r);
  out.jphi = inv_m * std::imag(bar * d_phi) / (p.r * p.r);
  out.jz = inv_m * std::imag(bar * d_z) - inv_m * g * c * std::imag(bar * dir);
  return out;
}

}  // namespace kgo
