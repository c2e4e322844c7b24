#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kgo/analytic.hpp"
#include "kgo/model.hpp"
#include "kgo/radial_solver.hpp"

namespace kgo {

struct CheckCase {
  std::string params;  // compact description of the case inputs
  double expected = 0.0;
  double actual = 0.0;
  double error = 0.0;
  std::string status = "ok";  // ok | info | skipped | <error kind>
};

/// Outcome of one verification sweep. passed is equivalent to
/// max_rel_error <= tolerance (relative mode) or max_abs_error <= tolerance
/// (absolute mode); a failing sub-case is recorded, never thrown.
struct VerificationReport {
  std::string check;
  double tolerance = 0.0;
  std::string mode = "relative";  // "relative" or "absolute"
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  bool passed = false;
  std::vector<CheckCase> cases;
};

using ParamGrid = std::vector<std::pair<ModelParams, BackgroundConfig>>;

/// Closed-form energies against Richardson-extrapolated finite-difference
/// energies for every (|l|, n_r) with principal number n <= max_n.
/// base_points <= 0 selects the default grid.
VerificationReport check_spectrum(const ParamGrid& grid, Prescription presc, int max_n,
                                  int base_points = 0, double tol = 1e-6);

struct NormalizationCase {
  ModelParams params;
  BackgroundConfig config;
  QuantumNumbers qn;
};

/// Builds N_n from the closed form and integrates the charge of the mode
/// over r by Gauss-Laguerre after the substitution x = Mw r^2; the result
/// must be 1 on the positive-charge branch. ZeroDensity cases are recorded
/// as skipped, not failed. Requires quad_order >= n_r + 2 for every case.
VerificationReport check_normalization(const std::vector<NormalizationCase>& grid,
                                       int quad_order, double tol = 1e-8);

struct Spacings {
  double t;
  double r;
  double z;
};

/// Max over sample points of the discrete divergence
///   d_t J^0 + (1/r) d_r (r J^r) + d_z J^z
/// by central differences. Both states must share l so the phi term drops
/// out of the two-mode interference.
double divergence_residual(const ModelParams& params, const BackgroundConfig& config,
                           std::span<const ModeState> states, const Spacings& spacing,
                           std::span<const SpacetimePoint> samples);

/// Two-mode conservation check: the divergence residual is pure truncation
/// error, so halving all spacings must reduce it by a factor in [3.5, 4.5].
VerificationReport check_conservation(const ModelParams& params,
                                      const BackgroundConfig& config,
                                      const ModeState& first, const ModeState& second,
                                      const Spacings& base);

/// Single stationary mode: the divergence vanishes identically, so the
/// residual must sit at round-off (< 1e-10).
VerificationReport check_stationary_current(const ModelParams& params,
                                            const BackgroundConfig& config);

/// E_Original(n) == E_Corrected(n+2) for every grid point, branch and
/// n <= max_n; exact by construction (the ordering shifts the dispersion
/// right-hand side through the integer n + 1 - sigma only).
VerificationReport check_prescription_shift(const ParamGrid& grid, int max_n,
                                            double tol = 1e-14);

// --- canned inputs shared by the CLI and the acceptance suite ---

/// Three unit-mass configurations plus one with non-unit M, w.
ParamGrid default_spectrum_grid();

/// Deterministic random valid parameter sets, per_case of each configuration
/// kind, drawn from ranges where all branches stay real and charged.
std::vector<NormalizationCase> random_normalization_cases(int per_case, unsigned seed);

/// Fixed (t, r, z) sample cloud for divergence checks, phi = 0.
std::vector<SpacetimePoint> default_sample_points();

/// Two normalized modes sharing l = 1 with distinct (n_r, k), suitable for
/// check_conservation under the given background.
std::pair<ModeState, ModeState> conservation_test_modes(const ModelParams& params,
                                                        const BackgroundConfig& config);

bool all_passed(std::span<const VerificationReport> reports);

/// {"schema_version": 1, "passed": ..., "reports": [...]}.
std::string reports_to_json(std::span<const VerificationReport> reports, int indent = 2);

}  // namespace kgo
