#include "emsound/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "emsound/forward.hpp"
#include "emsound/rng.hpp"

namespace emsound {

double TestProfile::operator()(double z) const {
  switch (kind) {
    case Kind::f1:
      return std::exp(-(z - 1.0) * (z - 1.0));
    case Kind::f2:
      if (z <= 0.0) return 0.0;
      if (z < 0.5) return 2.0 * z;
      if (z <= 1.0) return 1.0;
      if (z < 1.5) return 3.0 - 2.0 * z;
      return 0.0;
    case Kind::f3:
      if (!(xi > 0.0)) throw std::invalid_argument("profile: f3 needs xi > 0");
      return std::abs(z - 1.0) <= 0.5 * xi ? 1.0 : 0.0;
  }
  return 0.0;
}

std::string TestProfile::name() const {
  switch (kind) {
    case Kind::f1: return "f1";
    case Kind::f2: return "f2";
    case Kind::f3: return "f3";
  }
  return "unknown";
}

LayeredEarthModel discretize(const TestProfile& profile, int n) {
  if (n < 2) throw std::invalid_argument("discretize: n must be at least 2");
  const double dbar = 2.0 / (n - 1);
  Eigen::VectorXd sigma(n);
  for (int j = 0; j < n; ++j) sigma[j] = profile(j * dbar);
  return make_model(std::move(sigma), Eigen::VectorXd::Constant(n - 1, dbar));
}

std::vector<double> make_heights(int m, double hbar) {
  if (m < 1) throw std::invalid_argument("make_heights: m must be at least 1");
  if (m > 1 && !(hbar > 0.0))
    throw std::invalid_argument("make_heights: hbar must be positive for m > 1");
  // Tolerance keeps the m = 20 preset (1.9/19, one ulp under 0.1) quiet.
  if (m > 1 && hbar < 0.1 * (1.0 - 1e-12))
    std::cerr << "warning: height step " << hbar
              << " m is below the instrument's 0.1 m floor\n";
  std::vector<double> h(m);
  for (int i = 0; i < m; ++i) h[i] = i * hbar;
  return h;
}

double preset_hbar(int m) {
  if (m < 1) throw std::invalid_argument("preset_hbar: m must be at least 1");
  return m == 1 ? 0.0 : 1.9 / (m - 1);
}

Synthetic synthesize(const TestProfile& profile, int n, int m, const NoiseSpec& noise,
                     const InstrumentSetup& base) {
  if (!(noise.tau >= 0.0)) throw std::invalid_argument("synthesize: tau must be >= 0");
  Synthetic syn;
  syn.model = discretize(profile, n);
  syn.setup = base;
  if (static_cast<int>(base.heights.size()) != m)
    syn.setup.heights = make_heights(m, preset_hbar(m));
  syn.setup.validate();
  syn.b_hat = forward_map(syn.model, syn.setup);

  const int M = static_cast<int>(syn.b_hat.size());
  NormalRng rng(noise.seed);
  Eigen::VectorXd w(M);
  for (int i = 0; i < M; ++i) w[i] = rng.normal();
  // sqrt(M) keeps E||b - b_hat|| ~= tau ||b_hat|| for single-orientation data
  // too (M = 2m when both orientations are present).
  const double scale = syn.b_hat.norm() * noise.tau / std::sqrt(static_cast<double>(M));
  syn.data.b = syn.b_hat + scale * w;
  syn.data.heights = syn.setup.heights;
  syn.data.vertical = syn.setup.vertical;
  syn.data.horizontal = syn.setup.horizontal;
  syn.data.noise_estimate = noise.tau * syn.b_hat.norm();
  syn.realized_noise = (syn.data.b - syn.b_hat).norm();
  return syn;
}

double relative_error(const Eigen::VectorXd& sigma_true, const Eigen::VectorXd& sigma_est) {
  if (sigma_true.size() != sigma_est.size())
    throw std::invalid_argument("relative_error: length mismatch");
  const double tn = sigma_true.norm();
  if (!(tn > 0.0)) throw std::invalid_argument("relative_error: sigma_true must be nonzero");
  return (sigma_true - sigma_est).norm() / tn;
}

CellResult run_cell(const CellSpec& spec, std::uint64_t master_seed, std::uint64_t cell_index) {
  if (spec.realizations < 1) throw std::invalid_argument("run_cell: realizations must be >= 1");
  CellResult result;
  result.spec = spec;
  result.records.resize(spec.realizations);

  InstrumentSetup base;
  base.vertical = spec.vertical;
  base.horizontal = spec.horizontal;

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < spec.realizations; ++k) {
    RealizationRecord rec;
    rec.realization = k;
    rec.seed = derive_seed(master_seed, cell_index, static_cast<std::uint64_t>(k));
    try {
      const Synthetic syn = synthesize(spec.profile, spec.n, spec.m, {spec.tau, rec.seed}, base);
      SolverConfig cfg;
      cfg.step_source = spec.step_source;
      cfg.broyden_refresh = spec.broyden_refresh;
      cfg.regularizer = spec.reg;
      cfg.choice_rule = ChoiceRule::oracle;
      cfg.oracle_sigma = syn.model.sigma;
      cfg.noise_norm = syn.data.noise_estimate.value_or(0.0);
      const InversionResult res = solve(cfg, syn.setup, syn.data, syn.model.d);
      rec.e_opt = relative_error(syn.model.sigma, res.chosen_sigma);
      rec.ell_opt = res.chosen_ell;
      rec.iterations = res.per_ell[res.chosen_index].iterations;
      rec.termination = to_string(res.per_ell[res.chosen_index].termination);
      Eigen::Index arg = 0;
      res.chosen_sigma.maxCoeff(&arg);
      rec.argmax_layer = static_cast<int>(arg);
    } catch (const std::exception& e) {
      rec.e_opt = std::numeric_limits<double>::quiet_NaN();
      rec.termination = std::string("failed: ") + e.what();
    }
    result.records[k] = rec;
  }

  double sum = 0.0, sum2 = 0.0, sum_ell = 0.0, sum_iter = 0.0;
  int valid = 0;
  for (const RealizationRecord& rec : result.records) {
    if (!std::isfinite(rec.e_opt)) continue;
    sum += rec.e_opt;
    sum_ell += rec.ell_opt;
    sum_iter += rec.iterations;
    ++valid;
  }
  if (valid > 0) {
    result.mean_eopt = sum / valid;
    result.mean_ell = sum_ell / valid;
    result.mean_iterations = sum_iter / valid;
    for (const RealizationRecord& rec : result.records)
      if (std::isfinite(rec.e_opt))
        sum2 += (rec.e_opt - result.mean_eopt) * (rec.e_opt - result.mean_eopt);
    result.std_eopt = valid > 1 ? std::sqrt(sum2 / (valid - 1)) : 0.0;
  } else {
    result.mean_eopt = std::numeric_limits<double>::quiet_NaN();
    result.std_eopt = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

namespace {

struct ReferenceCell {
  const char* table;
  const char* profile;
  RegKind reg;
  const char* orient;
  int m;
  int n;
  double value;
};

constexpr RegKind kI = RegKind::identity;
constexpr RegKind kD1 = RegKind::first_difference;
constexpr RegKind kD2 = RegKind::second_difference;

// Published reference e_opt values; rows follow the (m, n) grid.
const ReferenceCell kReferenceCells[] = {
    {"table1", "f1", kI, "both", 5, 20, 2.4e-1},   {"table1", "f1", kI, "both", 5, 40, 2.4e-1},
    {"table1", "f1", kI, "both", 10, 20, 2.2e-1},  {"table1", "f1", kI, "both", 10, 40, 2.1e-1},
    {"table1", "f1", kI, "both", 20, 20, 2.2e-1},  {"table1", "f1", kI, "both", 20, 40, 2.2e-1},
    {"table1", "f1", kD1, "both", 5, 20, 8.6e-2},  {"table1", "f1", kD1, "both", 5, 40, 8.0e-2},
    {"table1", "f1", kD1, "both", 10, 20, 5.2e-2}, {"table1", "f1", kD1, "both", 10, 40, 5.7e-2},
    {"table1", "f1", kD1, "both", 20, 20, 3.9e-2}, {"table1", "f1", kD1, "both", 20, 40, 4.9e-2},
    {"table1", "f1", kD2, "both", 5, 20, 6.9e-2},  {"table1", "f1", kD2, "both", 5, 40, 7.0e-2},
    {"table1", "f1", kD2, "both", 10, 20, 5.2e-2}, {"table1", "f1", kD2, "both", 10, 40, 4.6e-2},
    {"table1", "f1", kD2, "both", 20, 20, 3.1e-2}, {"table1", "f1", kD2, "both", 20, 40, 3.5e-2},
    {"table1", "f2", kI, "both", 5, 20, 3.1e-1},   {"table1", "f2", kI, "both", 5, 40, 3.7e-1},
    {"table1", "f2", kI, "both", 10, 20, 2.8e-1},  {"table1", "f2", kI, "both", 10, 40, 3.5e-1},
    {"table1", "f2", kI, "both", 20, 20, 2.8e-1},  {"table1", "f2", kI, "both", 20, 40, 3.9e-1},
    {"table1", "f2", kD1, "both", 5, 20, 7.2e-2},  {"table1", "f2", kD1, "both", 5, 40, 6.4e-2},
    {"table1", "f2", kD1, "both", 10, 20, 6.3e-2}, {"table1", "f2", kD1, "both", 10, 40, 6.2e-2},
    {"table1", "f2", kD1, "both", 20, 20, 6.5e-2}, {"table1", "f2", kD1, "both", 20, 40, 5.9e-2},
    {"table1", "f2", kD2, "both", 5, 20, 9.7e-2},  {"table1", "f2", kD2, "both", 5, 40, 1.2e-1},
    {"table1", "f2", kD2, "both", 10, 20, 7.3e-2}, {"table1", "f2", kD2, "both", 10, 40, 8.2e-2},
    {"table1", "f2", kD2, "both", 20, 20, 7.9e-2}, {"table1", "f2", kD2, "both", 20, 40, 7.2e-2},
    {"table1", "f3", kI, "both", 5, 20, 4.2e-1},   {"table1", "f3", kI, "both", 5, 40, 4.6e-1},
    {"table1", "f3", kI, "both", 10, 20, 3.5e-1},  {"table1", "f3", kI, "both", 10, 40, 4.7e-1},
    {"table1", "f3", kI, "both", 20, 20, 3.3e-1},  {"table1", "f3", kI, "both", 20, 40, 4.7e-1},
    {"table1", "f3", kD1, "both", 5, 20, 2.9e-1},  {"table1", "f3", kD1, "both", 5, 40, 2.9e-1},
    {"table1", "f3", kD1, "both", 10, 20, 2.7e-1}, {"table1", "f3", kD1, "both", 10, 40, 2.6e-1},
    {"table1", "f3", kD1, "both", 20, 20, 2.6e-1}, {"table1", "f3", kD1, "both", 20, 40, 2.6e-1},
    {"table1", "f3", kD2, "both", 5, 20, 2.9e-1},  {"table1", "f3", kD2, "both", 5, 40, 3.0e-1},
    {"table1", "f3", kD2, "both", 10, 20, 2.7e-1}, {"table1", "f3", kD2, "both", 10, 40, 2.8e-1},
    {"table1", "f3", kD2, "both", 20, 20, 2.7e-1}, {"table1", "f3", kD2, "both", 20, 40, 2.9e-1},

    {"table2", "f1", kD2, "both", 5, 20, 6.9e-2},  {"table2", "f1", kD2, "both", 5, 40, 7.0e-2},
    {"table2", "f1", kD2, "both", 10, 20, 5.2e-2}, {"table2", "f1", kD2, "both", 10, 40, 4.6e-2},
    {"table2", "f1", kD2, "both", 20, 20, 3.1e-2}, {"table2", "f1", kD2, "both", 20, 40, 3.5e-2},
    {"table2", "f2", kD1, "both", 5, 20, 7.2e-2},  {"table2", "f2", kD1, "both", 5, 40, 6.4e-2},
    {"table2", "f2", kD1, "both", 10, 20, 6.3e-2}, {"table2", "f2", kD1, "both", 10, 40, 6.2e-2},
    {"table2", "f2", kD1, "both", 20, 20, 6.5e-2}, {"table2", "f2", kD1, "both", 20, 40, 5.9e-2},
    {"table2", "f3", kD1, "both", 5, 20, 2.9e-1},  {"table2", "f3", kD1, "both", 5, 40, 2.9e-1},
    {"table2", "f3", kD1, "both", 10, 20, 2.7e-1}, {"table2", "f3", kD1, "both", 10, 40, 2.6e-1},
    {"table2", "f3", kD1, "both", 20, 20, 2.6e-1}, {"table2", "f3", kD1, "both", 20, 40, 2.6e-1},
    {"table2", "f1", kD2, "vertical", 5, 20, 1.4e-1},
    {"table2", "f1", kD2, "vertical", 5, 40, 1.0e-1},
    {"table2", "f1", kD2, "vertical", 10, 20, 7.0e-2},
    {"table2", "f1", kD2, "vertical", 10, 40, 1.2e-1},
    {"table2", "f1", kD2, "vertical", 20, 20, 7.5e-2},
    {"table2", "f1", kD2, "vertical", 20, 40, 7.5e-2},
    {"table2", "f2", kD1, "vertical", 5, 20, 1.8e-1},
    {"table2", "f2", kD1, "vertical", 5, 40, 1.8e-1},
    {"table2", "f2", kD1, "vertical", 10, 20, 1.4e-1},
    {"table2", "f2", kD1, "vertical", 10, 40, 1.4e-1},
    {"table2", "f2", kD1, "vertical", 20, 20, 1.2e-1},
    {"table2", "f2", kD1, "vertical", 20, 40, 1.1e-1},
    {"table2", "f3", kD1, "vertical", 5, 20, 3.7e-1},
    {"table2", "f3", kD1, "vertical", 5, 40, 3.7e-1},
    {"table2", "f3", kD1, "vertical", 10, 20, 3.8e-1},
    {"table2", "f3", kD1, "vertical", 10, 40, 3.5e-1},
    {"table2", "f3", kD1, "vertical", 20, 20, 3.3e-1},
    {"table2", "f3", kD1, "vertical", 20, 40, 3.3e-1},
    {"table2", "f1", kD2, "horizontal", 5, 20, 1.3e-1},
    {"table2", "f1", kD2, "horizontal", 5, 40, 1.3e-1},
    {"table2", "f1", kD2, "horizontal", 10, 20, 8.4e-2},
    {"table2", "f1", kD2, "horizontal", 10, 40, 6.1e-2},
    {"table2", "f1", kD2, "horizontal", 20, 20, 7.2e-2},
    {"table2", "f1", kD2, "horizontal", 20, 40, 6.7e-2},
    {"table2", "f2", kD1, "horizontal", 5, 20, 2.7e-1},
    {"table2", "f2", kD1, "horizontal", 5, 40, 2.6e-1},
    {"table2", "f2", kD1, "horizontal", 10, 20, 1.4e-1},
    {"table2", "f2", kD1, "horizontal", 10, 40, 1.2e-1},
    {"table2", "f2", kD1, "horizontal", 20, 20, 1.1e-1},
    {"table2", "f2", kD1, "horizontal", 20, 40, 8.6e-2},
    {"table2", "f3", kD1, "horizontal", 5, 20, 4.4e-1},
    {"table2", "f3", kD1, "horizontal", 5, 40, 4.1e-1},
    {"table2", "f3", kD1, "horizontal", 10, 20, 3.8e-1},
    {"table2", "f3", kD1, "horizontal", 10, 40, 4.0e-1},
    {"table2", "f3", kD1, "horizontal", 20, 20, 3.5e-1},
    {"table2", "f3", kD1, "horizontal", 20, 40, 3.4e-1},

    {"table3", "f1", kD2, "both", 5, 20, 7.3e-2},  {"table3", "f1", kD2, "both", 5, 40, 7.6e-2},
    {"table3", "f1", kD2, "both", 10, 20, 5.5e-2}, {"table3", "f1", kD2, "both", 10, 40, 4.8e-2},
    {"table3", "f1", kD2, "both", 20, 20, 4.3e-2}, {"table3", "f1", kD2, "both", 20, 40, 4.0e-2},
    {"table3", "f2", kD1, "both", 5, 20, 7.7e-2},  {"table3", "f2", kD1, "both", 5, 40, 7.6e-2},
    {"table3", "f2", kD1, "both", 10, 20, 6.9e-2}, {"table3", "f2", kD1, "both", 10, 40, 7.4e-2},
    {"table3", "f2", kD1, "both", 20, 20, 7.3e-2}, {"table3", "f2", kD1, "both", 20, 40, 6.9e-2},
    {"table3", "f3", kD1, "both", 5, 20, 3.0e-1},  {"table3", "f3", kD1, "both", 5, 40, 2.9e-1},
    {"table3", "f3", kD1, "both", 10, 20, 2.7e-1}, {"table3", "f3", kD1, "both", 10, 40, 2.8e-1},
    {"table3", "f3", kD1, "both", 20, 20, 2.6e-1}, {"table3", "f3", kD1, "both", 20, 40, 2.7e-1},
};

std::string orientation_name(bool vertical, bool horizontal) {
  if (vertical && horizontal) return "both";
  return vertical ? "vertical" : "horizontal";
}

}  // namespace

double published_eopt(const std::string& table, const std::string& profile, RegKind reg,
                  const std::string& orientation, int n, int m) {
  for (const ReferenceCell& cell : kReferenceCells)
    if (table == cell.table && profile == cell.profile && reg == cell.reg &&
        orientation == cell.orient && m == cell.m && n == cell.n)
      return cell.value;
  return 0.0;
}

TableReport run_table(const std::string& preset, const TableOverrides& overrides) {
  TableReport report;
  report.preset = preset;
  const std::vector<int> ns = overrides.n_values.empty()
                                  ? std::vector<int>{20, 40}
                                  : overrides.n_values;
  const std::vector<int> ms = overrides.m_values.empty()
                                  ? std::vector<int>{5, 10, 20}
                                  : overrides.m_values;
  std::uint64_t cell_index = 0;

  const auto run_one = [&](CellSpec spec, const std::string& table) {
    spec.realizations = overrides.realizations;
    CellResult cell = run_cell(spec, overrides.seed, cell_index++);
    cell.published_value = published_eopt(table, spec.profile.name(), spec.reg,
                                  orientation_name(spec.vertical, spec.horizontal), spec.n,
                                  spec.m);
    report.cells.push_back(std::move(cell));
  };

  const std::vector<std::pair<TestProfile::Kind, RegKind>> pairs{
      {TestProfile::Kind::f1, kD2},
      {TestProfile::Kind::f2, kD1},
      {TestProfile::Kind::f3, kD1}};

  if (preset == "table1") {
    for (TestProfile::Kind kind :
         {TestProfile::Kind::f1, TestProfile::Kind::f2, TestProfile::Kind::f3})
      for (RegKind reg : {kI, kD1, kD2})
        for (int m : ms)
          for (int n : ns) {
            CellSpec spec;
            spec.profile.kind = kind;
            spec.reg = reg;
            spec.n = n;
            spec.m = m;
            spec.tau = overrides.tau;
            run_one(spec, "table1");
          }
  } else if (preset == "table2") {
    for (int orient = 0; orient < 3; ++orient)
      for (const auto& pr : pairs)
        for (int m : ms)
          for (int n : ns) {
            CellSpec spec;
            spec.profile.kind = pr.first;
            spec.reg = pr.second;
            spec.n = n;
            spec.m = m;
            spec.tau = overrides.tau;
            spec.vertical = orient != 2;
            spec.horizontal = orient != 1;
            run_one(spec, "table2");
          }
  } else if (preset == "table3") {
    for (const auto& pr : pairs)
      for (int m : ms)
        for (int n : ns) {
          CellSpec spec;
          spec.profile.kind = pr.first;
          spec.reg = pr.second;
          spec.n = n;
          spec.m = m;
          spec.tau = overrides.tau;
          spec.step_source = JacobianSource::broyden;
          spec.broyden_refresh = 10;
          run_one(spec, "table3");
        }
  } else if (preset == "fig2") {
    // Conditioning study: singular-value statistics of the analytic Jacobian
    // over random sigma in [0, 100]^n, m = 10. The realizations override
    // keeps its default meaning for tables; here the default 20 means "use
    // the full 1000 trials".
    const int trials = overrides.realizations == 20 ? 1000 : overrides.realizations;
    const std::vector<int> fig_ns = overrides.n_values.empty() ? std::vector<int>{20}
                                                               : overrides.n_values;
    report.xy_header = {"n", "index", "mean_sv", "min_sv", "max_sv"};
    InstrumentSetup setup;
    setup.heights = make_heights(10, preset_hbar(10));
    for (std::size_t ni = 0; ni < fig_ns.size(); ++ni) {
      const int n = fig_ns[ni];
      const double dbar = 2.0 / (n - 1);
      const int nsv = std::min(n, setup.data_size());
      Eigen::MatrixXd sv(trials, nsv);
#pragma omp parallel for schedule(dynamic)
      for (int trial = 0; trial < trials; ++trial) {
        NormalRng rng(derive_seed(overrides.seed, ni, static_cast<std::uint64_t>(trial)));
        Eigen::VectorXd sigma(n);
        for (int j = 0; j < n; ++j) sigma[j] = rng.uniform(0.0, 100.0);
        const LayeredEarthModel model =
            make_model(std::move(sigma), Eigen::VectorXd::Constant(n - 1, dbar));
        const JacobianMatrix J = analytic_jacobian(model, setup);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(J.entries);
        sv.row(trial) = svd.singularValues().head(nsv).transpose();
      }
      for (int i = 0; i < nsv; ++i)
        report.xy.push_back({static_cast<double>(n), static_cast<double>(i + 1),
                             sv.col(i).mean(), sv.col(i).minCoeff(), sv.col(i).maxCoeff()});
    }
  } else if (preset == "fig56") {
    const std::vector<double> xis{0.4, 0.7, 1.0, 1.3, 1.6, 2.0};
    const std::vector<double> taus{1e-3, 1e-2, 1e-1};
    const int n = overrides.n_values.empty() ? 40 : overrides.n_values.front();
    const int m = overrides.m_values.empty() ? 20 : overrides.m_values.front();
    report.xy_header = {"xi", "L", "tau", "mean_eopt", "std_eopt"};
    for (double xi : xis)
      for (RegKind reg : {kI, kD1, kD2})
        for (double tau : taus) {
          CellSpec spec;
          spec.profile.kind = TestProfile::Kind::f3;
          spec.profile.xi = xi;
          spec.reg = reg;
          spec.n = n;
          spec.m = m;
          spec.tau = tau;
          run_one(spec, "fig56");
          const CellResult& cell = report.cells.back();
          report.xy.push_back({xi, static_cast<double>(static_cast<int>(reg)), tau,
                               cell.mean_eopt, cell.std_eopt});
        }
  } else {
    throw std::invalid_argument("run_table: unknown preset \"" + preset + "\"");
  }
  return report;
}

void write_report_csv(const TableReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out.precision(10);
  out << "preset,profile,xi,L,orientation,n,m,tau,source,realizations,"
         "mean_eopt,std_eopt,mean_ell,mean_iterations,published_eopt\n";
  for (const CellResult& cell : report.cells) {
    const CellSpec& s = cell.spec;
    out << report.preset << ',' << s.profile.name() << ',' << s.profile.xi << ','
        << to_string(s.reg) << ',' << orientation_name(s.vertical, s.horizontal) << ',' << s.n
        << ',' << s.m << ',' << s.tau << ',' << to_string(s.step_source) << ','
        << s.realizations << ',' << cell.mean_eopt << ',' << cell.std_eopt << ','
        << cell.mean_ell << ',' << cell.mean_iterations << ',' << cell.published_value << "\n";
  }
}

void write_report_jsonl(const TableReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  for (const CellResult& cell : report.cells) {
    const CellSpec& s = cell.spec;
    for (const RealizationRecord& rec : cell.records) {
      nlohmann::json j{{"preset", report.preset},
                       {"profile", s.profile.name()},
                       {"xi", s.profile.xi},
                       {"L", to_string(s.reg)},
                       {"orientation", orientation_name(s.vertical, s.horizontal)},
                       {"n", s.n},
                       {"m", s.m},
                       {"tau", s.tau},
                       {"source", to_string(s.step_source)},
                       {"realization", rec.realization},
                       {"seed", rec.seed},
                       {"e_opt", rec.e_opt},
                       {"ell_opt", rec.ell_opt},
                       {"iterations", rec.iterations},
                       {"termination", rec.termination},
                       {"argmax_layer", rec.argmax_layer}};
      out << j.dump() << "\n";
    }
  }
}

void write_report_xy(const TableReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out.precision(10);
  for (std::size_t i = 0; i < report.xy_header.size(); ++i)
    out << report.xy_header[i] << (i + 1 < report.xy_header.size() ? ',' : '\n');
  for (const auto& row : report.xy)
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? ',' : '\n');
}

}  // namespace emsound
