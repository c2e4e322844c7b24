#include "kgo/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kgo {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off_sq;  // squared off-diagonal entries
};

// Symmetrized finite-volume discretization on r_i = (i - 1/2) h.
Tridiagonal assemble(double m_omega, int l, double r_max, int n) {
  const double h = r_max / n;
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal m;
  m.diag.resize(n);
  m.off_sq.resize(n - 1);
  for (int i = 1; i <= n; ++i) {
    const double r = (i - 0.5) * h;
    const double r_minus = (i - 1) * h;  // r_{i-1/2}; zero flux at the axis
    const double r_plus = i * h;         // r_{i+1/2}
    m.diag[i - 1] = (r_minus + r_plus) / r * inv_h2 + double(l) * l / (r * r) +
                    m_omega * m_omega * r * r;
    if (i < n) {
      const double r_next = (i + 0.5) * h;
      const double off = -r_plus * inv_h2 / std::sqrt(r * r_next);
      m.off_sq[i - 1] = off * off;
    }
  }
  return m;
}

// Number of eigenvalues strictly below x (Sturm sequence).
int count_below(const Tridiagonal& m, double x, double pivmin) {
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < m.diag.size(); ++i) {
    d = m.diag[i] - x - (i > 0 ? m.off_sq[i - 1] / d : 0.0);
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& m, int count) {
  const int n = static_cast<int>(m.diag.size());
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  double max_off_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double left = i > 0 ? std::sqrt(m.off_sq[i - 1]) : 0.0;
    const double right = i < n - 1 ? std::sqrt(m.off_sq[i]) : 0.0;
    lo = std::min(lo, m.diag[i] - left - right);
    hi = std::max(hi, m.diag[i] + left + right);
    max_off_sq = std::max(max_off_sq, i < n - 1 ? m.off_sq[i] : 0.0);
  }
  const double pivmin =
      std::max(max_off_sq, 1.0) * std::numeric_limits<double>::min() /
      std::numeric_limits<double>::epsilon();

  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (b - a <= 2.0 * std::numeric_limits<double>::epsilon() *
                       std::max({std::abs(a), std::abs(b), 1.0}))
        break;
      if (count_below(m, mid, pivmin) >= k + 1)
        b = mid;
      else
        a = mid;
    }
    out[k] = 0.5 * (a + b);
  }
  return out;
}

std::vector<double> eigenvalues_on(double m_omega, int l, double r_max, int points,
                                   int count) {
  return lowest_eigenvalues(assemble(m_omega, l, r_max, points), count);
}

}  // namespace

GridSpec::GridSpec(double r_max_, int points_) : r_max(r_max_), points(points_) {
  if (!(r_max > 0.0)) throw std::invalid_argument("GridSpec: r_max must be > 0");
  if (points < 100) throw std::invalid_argument("GridSpec: at least 100 points required");
}

GridSpec default_grid(const ModelParams& params, int points) {
  return GridSpec(std::sqrt(80.0 / (params.mass * params.omega)), points);
}

LambdaSpectrum solve_radial(const ModelParams& params, int l, int count,
                            const GridSpec& grid) {
  if (count < 1) throw std::invalid_argument("solve_radial: count must be >= 1");
  if (count > grid.points / 10)
    throw std::invalid_argument("solve_radial: count must be <= points/10");

  const double m_omega = params.mass * params.omega;
  const int al = std::abs(l);
  // One extra eigenvalue for the gap estimate.
  std::vector<double> vals = eigenvalues_on(m_omega, al, grid.r_max, grid.points, count + 1);

  const double h = grid.r_max / grid.points;
  const double top = vals[count - 1];
  const double gap = vals[count] - vals[count - 1];
  const double est_error = top * top * h * h / 12.0;
  if (est_error > 0.01 * gap)
    throw GridTooCoarseError("solve_radial: estimated error " + std::to_string(est_error) +
                             " of eigenvalue " + std::to_string(count - 1) +
                             " exceeds 1% of the gap " + std::to_string(gap));

  vals.resize(count);
  for (int i = 1; i < count; ++i)
    if (!(vals[i] > vals[i - 1]))
      throw ConvergenceError("solve_radial: eigenvalues not strictly ascending");
  return {std::move(vals), grid, l, {}};
}

LambdaSpectrum richardson_lambda(const ModelParams& params, int l, int count,
                                 const GridSpec& grid) {
  LambdaSpectrum coarse = solve_radial(params, l, count, grid);
  const double m_omega = params.mass * params.omega;
  const int al = std::abs(l);
  const std::vector<double> mid =
      eigenvalues_on(m_omega, al, grid.r_max, 2 * grid.points, count);
  const std::vector<double> fine =
      eigenvalues_on(m_omega, al, grid.r_max, 4 * grid.points, count);

  LambdaSpectrum out{{}, grid, l, {}};
  out.lambdas.resize(count);
  out.observed_orders.resize(count);
  for (int i = 0; i < count; ++i) {
    out.lambdas[i] = (4.0 * fine[i] - mid[i]) / 3.0;
    const double num = coarse.lambdas[i] - mid[i];
    const double den = mid[i] - fine[i];
    out.observed_orders[i] =
        den != 0.0 && num / den > 0.0 ? std::log2(num / den)
                                      : std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

EnergyLevels energies_from_lambda(double lambda, const ModelParams& params,
                                  const BackgroundConfig& config, Prescription presc) {
  const DispersionCoefficients coeffs = dispersion_coefficients(params, config);
  const double k = params.wavenumber;
  const double rhs = lambda + params.mass * params.mass + coeffs.k_coeff * k * k -
                     ordering_sign(presc) * 2.0 * params.mass * params.omega;
  return solve_dispersion(coeffs, rhs, lambda);
}

}  // namespace kgo
