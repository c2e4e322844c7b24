// kgo: command-line front end for the oscillator library.
//
// Subcommands: spectrum | wavefunction | normalize | verify | sweep.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 I/O error, 4 physical precondition violated.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kgo/analytic.hpp"
#include "kgo/model.hpp"
#include "kgo/radial_solver.hpp"
#include "kgo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitPhysical = 4;

using Cell = std::variant<std::monostate, double, long long, std::string>;

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }

  std::string to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        if (std::holds_alternative<double>(row[i]))
          out += format_double(std::get<double>(row[i]));
        else if (std::holds_alternative<long long>(row[i]))
          out += std::to_string(std::get<long long>(row[i]));
        else if (std::holds_alternative<std::string>(row[i]))
          out += std::get<std::string>(row[i]);
      }
      out += '\n';
    }
    return out;
  }

  std::string to_json() const {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (std::holds_alternative<double>(row[i]))
          obj[columns[i]] = std::get<double>(row[i]);
        else if (std::holds_alternative<long long>(row[i]))
          obj[columns[i]] = std::get<long long>(row[i]);
        else if (std::holds_alternative<std::string>(row[i]))
          obj[columns[i]] = std::get<std::string>(row[i]);
        else
          obj[columns[i]] = nullptr;
      }
      rows_json.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows_json);
    return doc.dump(2) + "\n";
  }
};

/// Everything a subcommand run needs, straight from the flags.
struct RunConfig {
  std::string case_label = "A";          // A | B | C
  std::string prescription = "corrected";
  double mass = 1.0;
  double omega = 1.0;
  double coupling = 0.0;
  double a = 0.0;
  double c = 0.0;
  double wavenumber = 0.0;
  std::vector<int> l_values;
  std::vector<int> n_r_values;
  std::string format = "csv";
  std::string out_path;
  double r_max = 0.0;    // 0: default from the tail bound
  int grid_points = 0;   // 0: subcommand default
  double tolerance = 0.0;  // 0: per-check default

  CLI::Option* a_option = nullptr;
  CLI::Option* c_option = nullptr;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool with_quantum_lists) {
  cmd->add_option("--case", cfg.case_label, "Background configuration: A (timelike), B (spacelike), C (mixed)")
      ->check(CLI::IsMember({"A", "B", "C"}));
  cmd->add_option("--prescription", cfg.prescription,
                  "Operator ordering: corrected (+2Mw) or original (-2Mw)")
      ->check(CLI::IsMember({"corrected", "original"}));
  cmd->add_option("--M", cfg.mass, "Mass M (default 1)");
  cmd->add_option("--omega", cfg.omega, "Oscillator frequency (default 1)");
  cmd->add_option("--g", cfg.coupling, "Symmetry-breaking coupling g (default 0)");
  cfg.a_option = cmd->add_option("--a", cfg.a, "Background component v^0 (cases A/C only, default 0)");
  cfg.c_option = cmd->add_option("--c", cfg.c, "Background component v^z (cases B/C only, default 0)");
  cmd->add_option("--k", cfg.wavenumber, "Longitudinal wavenumber k (default 0)");
  if (with_quantum_lists) {
    cmd->add_option("--l", cfg.l_values, "Magnetic quantum number(s), comma separated (default 0)")
        ->delimiter(',');
    cmd->add_option("--nr", cfg.n_r_values, "Radial quantum number(s), comma separated (default 0)")
        ->delimiter(',');
  }
  cmd->add_option("--format", cfg.format, "Output format: csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out_path, "Output file (default: standard output)");
}

/// Returns the configured background, or an error message.
std::variant<kgo::BackgroundConfig, std::string> make_config(const RunConfig& cfg) {
  if (cfg.case_label == "A") {
    if (cfg.c_option && cfg.c_option->count() > 0)
      return std::string("--c is meaningless for case A (timelike background)");
    return kgo::BackgroundConfig(kgo::TimeLike{cfg.a});
  }
  if (cfg.case_label == "B") {
    if (cfg.a_option && cfg.a_option->count() > 0)
      return std::string("--a is meaningless for case B (spacelike background)");
    return kgo::BackgroundConfig(kgo::SpaceLike{cfg.c});
  }
  return kgo::BackgroundConfig(kgo::Mixed{cfg.a, cfg.c});
}

kgo::Prescription make_prescription(const RunConfig& cfg) {
  return cfg.prescription == "original" ? kgo::Prescription::Original
                                        : kgo::Prescription::Corrected;
}

int write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  file << content;
  file.flush();
  if (!file) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int emit(const Table& table, const RunConfig& cfg) {
  return write_output(cfg.format == "json" ? table.to_json() : table.to_csv(),
                      cfg.out_path);
}

std::vector<Cell> common_cells(const RunConfig& cfg, const kgo::QuantumNumbers& qn) {
  return {cfg.case_label,
          cfg.prescription,
          cfg.mass,
          cfg.omega,
          cfg.coupling,
          cfg.a,
          cfg.c,
          cfg.wavenumber,
          static_cast<long long>(qn.l),
          static_cast<long long>(qn.n_r),
          static_cast<long long>(qn.principal())};
}

const std::vector<std::string> kSpectrumColumns = {
    "case", "prescription", "M", "omega", "g", "a", "c", "k",
    "l", "n_r", "n", "lambda", "E", "status"};

void append_spectrum_rows(Table& table, const RunConfig& cfg,
                          const kgo::ModelParams& params,
                          const kgo::BackgroundConfig& config,
                          const kgo::QuantumNumbers& qn,
                          const std::vector<Cell>& prefix) {
  const double lambda = kgo::lambda_required(params, qn);
  const auto row = [&](Cell energy, const char* status) {
    std::vector<Cell> cells = prefix;
    const std::vector<Cell> common = common_cells(cfg, qn);
    cells.insert(cells.end(), common.begin(), common.end());
    cells.push_back(lambda);
    cells.push_back(std::move(energy));
    cells.emplace_back(std::string(status));
    table.add_row(std::move(cells));
  };

  try {
    const kgo::EnergyLevels levels =
        kgo::energy_levels(params, config, make_prescription(cfg), qn);
    if (levels.degenerate) {
      row(*levels.e_plus, "degenerate");
    } else {
      row(*levels.e_plus, "ok");
      row(*levels.e_minus, "ok");
    }
  } catch (const kgo::ComplexEnergyError&) {
    row(std::monostate{}, "complex-energy");
  } catch (const kgo::DegenerateDispersionError&) {
    row(std::monostate{}, "degenerate-dispersion");
  }
}

int run_spectrum(const RunConfig& cfg) {
  const auto config_or = make_config(cfg);
  if (std::holds_alternative<std::string>(config_or)) {
    std::cerr << "error: " << std::get<std::string>(config_or) << "\n";
    return kExitUsage;
  }
  const auto& config = std::get<kgo::BackgroundConfig>(config_or);

  try {
    const kgo::ModelParams params(cfg.mass, cfg.omega, cfg.coupling, cfg.wavenumber);
    Table table;
    table.columns = kSpectrumColumns;
    for (int l : cfg.l_values)
      for (int nr : cfg.n_r_values)
        append_spectrum_rows(table, cfg, params, config, kgo::QuantumNumbers(l, nr), {});
    return emit(table, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_wavefunction(const RunConfig& cfg) {
  const auto config_or = make_config(cfg);
  if (std::holds_alternative<std::string>(config_or)) {
    std::cerr << "error: " << std::get<std::string>(config_or) << "\n";
    return kExitUsage;
  }
  const auto& config = std::get<kgo::BackgroundConfig>(config_or);
  if (cfg.l_values.size() != 1 || cfg.n_r_values.size() != 1) {
    std::cerr << "error: wavefunction takes a single --l and a single --nr\n";
    return kExitUsage;
  }

  try {
    const kgo::ModelParams params(cfg.mass, cfg.omega, cfg.coupling, cfg.wavenumber);
    const kgo::QuantumNumbers qn(cfg.l_values.front(), cfg.n_r_values.front());
    const kgo::EnergyLevels levels =
        kgo::energy_levels(params, config, make_prescription(cfg), qn);
    const double energy = *levels.e_plus;
    const double norm = kgo::normalization_constant(params, config, qn, energy);
    const kgo::RadialSolution sol = kgo::radial_wavefunction(params, qn, norm);
    const double factor = kgo::charge_density_factor(params, config, energy);

    const double r_max =
        cfg.r_max > 0.0 ? cfg.r_max : kgo::default_grid(params).r_max;
    const int samples = cfg.grid_points > 0 ? cfg.grid_points : 200;

    Table table;
    table.columns = {"r", "psi", "j0"};
    for (int i = 0; i <= samples; ++i) {
      const double r = r_max * i / samples;
      const double profile = sol.profile(r);
      table.add_row({r, sol.psi(r), factor * profile * profile});
    }
    return emit(table, cfg);
  } catch (const kgo::ZeroDensityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPhysical;
  } catch (const kgo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPhysical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_normalize(const RunConfig& cfg) {
  const auto config_or = make_config(cfg);
  if (std::holds_alternative<std::string>(config_or)) {
    std::cerr << "error: " << std::get<std::string>(config_or) << "\n";
    return kExitUsage;
  }
  const auto& config = std::get<kgo::BackgroundConfig>(config_or);

  try {
    const kgo::ModelParams params(cfg.mass, cfg.omega, cfg.coupling, cfg.wavenumber);
    Table table;
    table.columns = {"case", "prescription", "M", "omega", "g", "a", "c", "k",
                     "l", "n_r", "n", "E", "N", "status"};
    for (int l : cfg.l_values) {
      for (int nr : cfg.n_r_values) {
        const kgo::QuantumNumbers qn(l, nr);
        const auto row = [&](Cell energy, Cell norm, const char* status) {
          std::vector<Cell> cells = common_cells(cfg, qn);
          cells.push_back(std::move(energy));
          cells.push_back(std::move(norm));
          cells.emplace_back(std::string(status));
          table.add_row(std::move(cells));
        };
        try {
          const kgo::EnergyLevels levels =
              kgo::energy_levels(params, config, make_prescription(cfg), qn);
          std::vector<double> branches;
          if (levels.e_plus) branches.push_back(*levels.e_plus);
          if (levels.e_minus) branches.push_back(*levels.e_minus);
          for (double energy : branches) {
            try {
              row(energy, kgo::normalization_constant(params, config, qn, energy),
                  levels.degenerate ? "degenerate" : "ok");
            } catch (const kgo::ZeroDensityError&) {
              row(energy, std::monostate{}, "zero-density");
            }
          }
        } catch (const kgo::ComplexEnergyError&) {
          row(std::monostate{}, std::monostate{}, "complex-energy");
        } catch (const kgo::DegenerateDispersionError&) {
          row(std::monostate{}, std::monostate{}, "degenerate-dispersion");
        }
      }
    }
    return emit(table, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_sweep(const RunConfig& cfg, const std::string& axis, double start, double stop,
              int steps) {
  if (steps < 2) {
    std::cerr << "error: --steps must be >= 2\n";
    return kExitUsage;
  }
  const bool needs_a = axis == "a";
  const bool needs_c = axis == "c";
  if (needs_a && cfg.case_label == "B") {
    std::cerr << "error: axis 'a' is meaningless for case B\n";
    return kExitUsage;
  }
  if (needs_c && cfg.case_label == "A") {
    std::cerr << "error: axis 'c' is meaningless for case A\n";
    return kExitUsage;
  }

  Table table;
  table.columns = {"sweep"};
  table.columns.insert(table.columns.end(), kSpectrumColumns.begin(),
                       kSpectrumColumns.end());
  for (int i = 0; i < steps; ++i) {
    const double value = start + (stop - start) * i / (steps - 1);
    RunConfig point = cfg;
    if (axis == "g")
      point.coupling = value;
    else if (axis == "a")
      point.a = value;
    else if (axis == "c")
      point.c = value;
    else if (axis == "k")
      point.wavenumber = value;
    else
      point.omega = value;

    const auto config_or = make_config(point);
    if (std::holds_alternative<std::string>(config_or)) {
      std::cerr << "error: " << std::get<std::string>(config_or) << "\n";
      return kExitUsage;
    }
    try {
      const kgo::ModelParams params(point.mass, point.omega, point.coupling,
                                    point.wavenumber);
      for (int l : point.l_values)
        for (int nr : point.n_r_values)
          append_spectrum_rows(table, point, params,
                               std::get<kgo::BackgroundConfig>(config_or),
                               kgo::QuantumNumbers(l, nr), {Cell(value)});
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return emit(table, cfg);
}

int run_verify(const RunConfig& cfg, const std::string& selector) {
  std::vector<kgo::VerificationReport> reports;
  const double tol = cfg.tolerance;

  try {
    if (selector == "spectrum" || selector == "all") {
      reports.push_back(kgo::check_spectrum(kgo::default_spectrum_grid(),
                                            kgo::Prescription::Corrected, 4,
                                            cfg.grid_points, tol > 0.0 ? tol : 1e-6));
    }
    if (selector == "normalization" || selector == "all") {
      reports.push_back(kgo::check_normalization(kgo::random_normalization_cases(20, 42),
                                                 5, tol > 0.0 ? tol : 1e-8));
    }
    if (selector == "conservation" || selector == "all") {
      const kgo::ModelParams params(1.0, 1.0, 0.5, 0.0);
      const kgo::BackgroundConfig configs[] = {
          kgo::BackgroundConfig(kgo::TimeLike{1.0}),
          kgo::BackgroundConfig(kgo::SpaceLike{1.0}),
          kgo::BackgroundConfig(kgo::Mixed{1.0, 1.0})};
      for (const auto& config : configs) {
        const auto [first, second] = kgo::conservation_test_modes(params, config);
        kgo::VerificationReport two_mode = kgo::check_conservation(
            params, config, first, second, kgo::Spacings{0.04, 0.04, 0.04});
        if (tol > 0.0) {
          two_mode.tolerance = tol;
          two_mode.passed = two_mode.max_abs_error <= tol;
        }
        reports.push_back(std::move(two_mode));
        reports.push_back(kgo::check_stationary_current(params, config));
      }
    }
    if (selector == "prescription" || selector == "all") {
      reports.push_back(kgo::check_prescription_shift(kgo::default_spectrum_grid(), 6,
                                                      tol > 0.0 ? tol : 1e-14));
    }
  } catch (const kgo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPhysical;
  }

  const int io = write_output(
      kgo::reports_to_json(std::span<const kgo::VerificationReport>(reports)),
      cfg.out_path);
  if (io != kExitOk) return io;
  return kgo::all_passed(reports) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic oscillator with a symmetry-breaking background vector:\n"
               "energy spectra, eigenfunctions, conserved currents and their\n"
               "numerical verification."};
  app.require_subcommand(1);

  RunConfig spectrum_cfg, wave_cfg, norm_cfg, sweep_cfg, verify_cfg;

  CLI::App* spectrum = app.add_subcommand("spectrum", "Energy levels per (l, n_r, branch)");
  add_common_flags(spectrum, spectrum_cfg, true);

  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "Normalized radial eigenfunction table");
  add_common_flags(wavefunction, wave_cfg, true);
  wavefunction->add_option("--r-max", wave_cfg.r_max, "Upper end of the r table (default: tail bound)");
  wavefunction->add_option("--grid-points", wave_cfg.grid_points,
                           "Number of table intervals (default 200)");

  CLI::App* normalize =
      app.add_subcommand("normalize", "Normalization constants per (l, n_r, branch)");
  add_common_flags(normalize, norm_cfg, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check closed forms against the numerical oracles");
  std::string selector = "all";
  verify->add_option("selector", selector,
                     "spectrum | normalization | conservation | prescription | all")
      ->check(CLI::IsMember({"spectrum", "normalization", "conservation",
                             "prescription", "all"}));
  verify->add_option("--tol", verify_cfg.tolerance, "Tolerance override for the selected checks");
  verify->add_option("--grid-points", verify_cfg.grid_points,
                     "Base grid size for the finite-difference oracle (default 4000)");
  verify->add_option("--out", verify_cfg.out_path, "Output file (default: standard output)");

  CLI::App* sweep = app.add_subcommand("sweep", "Spectrum along one parameter axis");
  add_common_flags(sweep, sweep_cfg, true);
  std::string axis;
  double start = 0.0, stop = 0.0;
  int steps = 0;
  sweep->add_option("--axis", axis, "Swept parameter: g | a | c | k | omega")
      ->required()
      ->check(CLI::IsMember({"g", "a", "c", "k", "omega"}));
  sweep->add_option("--start", start, "First axis value")->required();
  sweep->add_option("--stop", stop, "Last axis value")->required();
  sweep->add_option("--steps", steps, "Number of axis values (>= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (RunConfig* cfg : {&spectrum_cfg, &wave_cfg, &norm_cfg, &sweep_cfg}) {
    if (cfg->l_values.empty()) cfg->l_values = {0};
    if (cfg->n_r_values.empty()) cfg->n_r_values = {0};
  }

  if (app.got_subcommand(spectrum)) return run_spectrum(spectrum_cfg);
  if (app.got_subcommand(wavefunction)) return run_wavefunction(wave_cfg);
  if (app.got_subcommand(normalize)) return run_normalize(norm_cfg);
  if (app.got_subcommand(sweep)) return run_sweep(sweep_cfg, axis, start, stop, steps);
  return run_verify(verify_cfg, selector);
}
