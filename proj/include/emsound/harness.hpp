#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "emsound/model.hpp"
#include "emsound/solver.hpp"

namespace emsound {

/// Synthetic conductivity profiles on z in [0, 2] m (values S/m):
/// f1(z) = exp(-(z-1)^2); f2 piecewise linear through (0,0), (0.5,1), (1,1),
/// (1.5,0), (2,0); f3 a unit step of length xi centered at z = 1 (closed support).
struct TestProfile {
  enum class Kind { f1, f2, f3 };
  Kind kind = Kind::f1;
  double xi = 1.0;  // f3 step length, m

  double operator()(double z) const;
  std::string name() const;
};

/// Uniform layers: d_k = 2/(n-1), sigma_j = profile(z_j), z_j = (j-1)*dbar.
LayeredEarthModel discretize(const TestProfile& profile, int n);

/// h_i = (i-1)*hbar. hbar below the instrument's 0.1 m floor only warns.
std::vector<double> make_heights(int m, double hbar);

/// Table presets use equispaced heights with max height 1.9 m.
double preset_hbar(int m);

struct NoiseSpec {
  double tau = 1e-3;
  std::uint64_t seed = 0;
};

struct Synthetic {
  LayeredEarthModel model;
  InstrumentSetup setup;
  SoundingData data;       // noisy; noise_estimate = tau * ||b_hat||
  Eigen::VectorXd b_hat;   // exact data
  double realized_noise = 0.0;  // ||b - b_hat||
};

/// b = b_hat + w * ||b_hat|| * tau / sqrt(M), w standard normal, M = data size.
Synthetic synthesize(const TestProfile& profile, int n, int m, const NoiseSpec& noise,
                     const InstrumentSetup& base);

/// Relative error ||sigma_true - sigma_est|| / ||sigma_true||.
double relative_error(const Eigen::VectorXd& sigma_true, const Eigen::VectorXd& sigma_est);

struct CellSpec {
  TestProfile profile;
  RegKind reg = RegKind::identity;
  int n = 20;
  int m = 20;
  double tau = 1e-3;
  bool vertical = true;
  bool horizontal = true;
  JacobianSource step_source = JacobianSource::analytic;
  int broyden_refresh = 10;
  int realizations = 20;
};

struct RealizationRecord {
  int realization = 0;
  std::uint64_t seed = 0;
  double e_opt = 0.0;
  int ell_opt = 0;
  int iterations = 0;
  std::string termination;
  int argmax_layer = 0;  // of the reconstructed sigma
};

struct CellResult {
  CellSpec spec;
  double mean_eopt = 0.0;
  double std_eopt = 0.0;
  double mean_ell = 0.0;
  double mean_iterations = 0.0;
  double published_value = 0.0;  // 0 when no published value exists for this cell
  std::vector<RealizationRecord> records;
};

/// Oracle-rule inversion statistics over noise realizations; realization k of
/// cell c uses seed derive_seed(master_seed, c, k). Deterministic bit-for-bit.
CellResult run_cell(const CellSpec& spec, std::uint64_t master_seed, std::uint64_t cell_index);

struct TableOverrides {
  std::uint64_t seed = 1912;
  int realizations = 20;
  double tau = 1e-3;
  std::vector<int> n_values;  // empty: preset default
  std::vector<int> m_values;
};

struct TableReport {
  std::string preset;
  std::vector<CellResult> cells;
  std::vector<std::string> xy_header;             // figure presets
  std::vector<std::vector<double>> xy;            // plot-ready rows
};

/// Presets: table1 (profile x regularizer x geometry grid), table2 (orientation study),
/// table3 (Broyden k_B = 10), fig2 (conditioning study), fig56 (f3 xi sweep).
TableReport run_table(const std::string& preset, const TableOverrides& overrides);

void write_report_csv(const TableReport& report, const std::string& path);
void write_report_jsonl(const TableReport& report, const std::string& path);
void write_report_xy(const TableReport& report, const std::string& path);

/// Published reference e_opt for (profile, reg, orientation, n, m); 0 when unreported.
double published_eopt(const std::string& table, const std::string& profile, RegKind reg,
                  const std::string& orientation, int n, int m);

}  // namespace emsound
