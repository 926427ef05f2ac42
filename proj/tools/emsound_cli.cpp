// Command-line front end for the EM sounding toolkit.
//
// Subcommands:
//   forward  model + measurement template -> predicted apparent conductivities
//   invert   data + solver config -> regularized inversion result (JSON)
//   synth    test profile -> synthetic data CSV (+ discretized truth JSON)
//   bench    experiment preset -> cells CSV, per-realization JSONL, XY CSV
//
// Exit codes: 0 success, 2 input error (bad flags, unreadable/invalid files),
// 3 numerical failure (inversion aborted or a compute-phase exception).
//
// All library quantities are S/m; `--units mS/m` converts data files at this
// boundary only (inversion result JSON stays in S/m).

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emsound/forward.hpp"
#include "emsound/harness.hpp"
#include "emsound/jacobian.hpp"
#include "emsound/model.hpp"
#include "emsound/regularize.hpp"
#include "emsound/rng.hpp"
#include "emsound/solver.hpp"

namespace {

using namespace emsound;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

double units_scale(const std::string& units) {
  if (units == "S/m") return 1.0;
  if (units == "mS/m") return 1e-3;
  throw CLI::ValidationError("--units", "expected S/m or mS/m");
}

RegKind parse_reg(const std::string& name) {
  if (name == "I") return RegKind::identity;
  if (name == "D1") return RegKind::first_difference;
  if (name == "D2") return RegKind::second_difference;
  throw CLI::ValidationError("--L", "expected I, D1, or D2");
}

ChoiceRule parse_rule(const std::string& name) {
  if (name == "discrepancy") return ChoiceRule::discrepancy;
  if (name == "corner") return ChoiceRule::lcurve;
  if (name == "resreg") return ChoiceRule::resreg;
  if (name == "oracle") return ChoiceRule::oracle;
  throw CLI::ValidationError("--rule", "expected discrepancy, corner, resreg, or oracle");
}

JacobianSource parse_jacobian(const std::string& name) {
  if (name == "analytic") return JacobianSource::analytic;
  if (name == "fd") return JacobianSource::finite_difference;
  if (name == "broyden") return JacobianSource::broyden;
  throw CLI::ValidationError("--jacobian", "expected analytic, fd, or broyden");
}

TestProfile parse_profile(const std::string& name, double xi) {
  TestProfile p;
  p.xi = xi;
  if (name == "f1")
    p.kind = TestProfile::Kind::f1;
  else if (name == "f2")
    p.kind = TestProfile::Kind::f2;
  else if (name == "f3")
    p.kind = TestProfile::Kind::f3;
  else
    throw CLI::ValidationError("profile", "expected f1, f2, or f3");
  return p;
}

// ---------------------------------------------------------------------------

struct ForwardArgs {
  std::string model_path;
  std::string data_path;  // optional template for heights/orientations
  std::string out_path;
  std::string units = "S/m";
  int m = 20;
};

int run_forward(const ForwardArgs& a) {
  LayeredEarthModel model;
  InstrumentSetup setup;
  SoundingData out;
  try {
    model = read_model_json(a.model_path);
    if (!a.data_path.empty()) {
      const SoundingData tmpl = read_data_csv(a.data_path);
      setup = setup_for(tmpl);
      out = tmpl;
    } else {
      setup.heights = make_heights(a.m, preset_hbar(a.m));
      out.heights = setup.heights;
      out.vertical = setup.vertical;
      out.horizontal = setup.horizontal;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  }
  try {
    out.b = forward_map(model, setup) / units_scale(a.units);
    write_data_csv(a.out_path, out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  std::printf("wrote %s (%d readings, %s)\n", a.out_path.c_str(),
              static_cast<int>(out.b.size()), a.units.c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct InvertArgs {
  std::string data_path;
  std::string config_path;
  std::string out_path;
  std::string units = "S/m";
  std::optional<double> tau;
  std::optional<std::string> reg;
  std::optional<std::string> rule;
  std::optional<std::string> jacobian;
  double dbar = 0.0;  // 0: uniform layers spanning 2 m
  int n = 20;
};

int run_invert(const InvertArgs& a) {
  SoundingData data;
  SolverConfig config;
  Eigen::VectorXd thickness;
  try {
    data = read_data_csv(a.data_path);
    data.b *= units_scale(a.units);
    if (!a.config_path.empty()) config = config_from_json_file(a.config_path);
    if (a.reg) config.regularizer = parse_reg(*a.reg);
    if (a.rule) config.choice_rule = parse_rule(*a.rule);
    if (a.jacobian) config.step_source = parse_jacobian(*a.jacobian);
    if (a.tau) {
      if (!(*a.tau >= 0.0)) throw CLI::ValidationError("--tau", "must be >= 0");
      config.noise_norm = *a.tau * data.b.norm();
      data.noise_estimate = config.noise_norm;
    } else if (data.noise_estimate) {
      config.noise_norm = *data.noise_estimate;
    }
    if (a.n < 2) throw CLI::ValidationError("--n", "need at least 2 layers");
    const double dbar = a.dbar > 0.0 ? a.dbar : 2.0 / (a.n - 1);
    thickness = Eigen::VectorXd::Constant(a.n - 1, dbar);
    config.validate();
    data.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  }
  try {
    const InstrumentSetup setup = setup_for(data);
    const InversionResult result = solve(config, setup, data, thickness);
    const std::string json = result_to_json(result, config);
    if (a.out_path.empty()) {
      std::printf("%s\n", json.c_str());
    } else {
      std::ofstream out(a.out_path);
      if (!out) throw std::runtime_error("cannot open " + a.out_path);
      out << json << '\n';
    }
    if (result.chosen_index < 0) {
      std::fprintf(stderr, "numerical failure: every truncation index aborted\n");
      return kExitNumerical;
    }
    std::fprintf(stderr, "chosen ell = %d (%s rule)%s\n", result.chosen_ell,
                 to_string(config.choice_rule).c_str(),
                 result.flags.empty() ? "" : " [flagged]");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SynthArgs {
  std::string profile = "f1";
  double xi = 1.0;
  int n = 20;
  int m = 20;
  double tau = 1e-3;
  std::uint64_t seed = 1912;
  std::string out_path;
  std::string units = "S/m";
  bool vertical_only = false;
  bool horizontal_only = false;
};

int run_synth(const SynthArgs& a) {
  Synthetic syn;
  try {
    if (a.vertical_only && a.horizontal_only)
      throw CLI::ValidationError("--vertical-only/--horizontal-only", "pick at most one");
    InstrumentSetup base;
    base.vertical = !a.horizontal_only;
    base.horizontal = !a.vertical_only;
    NoiseSpec noise;
    noise.tau = a.tau;
    noise.seed = a.seed;
    syn = synthesize(parse_profile(a.profile, a.xi), a.n, a.m, noise, base);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  }
  try {
    SoundingData out = syn.data;
    out.b /= units_scale(a.units);
    write_data_csv(a.out_path, out);
    const std::string model_path = a.out_path + ".model.json";
    write_model_json(model_path, syn.model);
    std::printf("wrote %s (%d readings, %s) and %s; realized ||b - b_hat|| = %.3e S/m\n",
                a.out_path.c_str(), static_cast<int>(out.b.size()), a.units.c_str(),
                model_path.c_str(), syn.realized_noise);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string preset;
  std::string out_prefix;
  std::uint64_t seed = 1912;
  double tau = 1e-3;
  int realizations = 20;
};

int run_bench(const BenchArgs& a) {
  TableReport report;
  try {
    TableOverrides overrides;
    overrides.seed = a.seed;
    overrides.tau = a.tau;
    overrides.realizations = a.realizations;
    report = run_table(a.preset, overrides);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  try {
    const std::string prefix = a.out_prefix.empty() ? a.preset : a.out_prefix;
    write_report_csv(report, prefix + "_cells.csv");
    write_report_jsonl(report, prefix + "_records.jsonl");
    std::string xy_note;
    if (!report.xy.empty()) {
      write_report_xy(report, prefix + "_xy.csv");
      xy_note = ", " + prefix + "_xy.csv";
    }
    std::printf("preset %s: %zu cells -> %s_cells.csv, %s_records.jsonl%s\n", a.preset.c_str(),
                report.cells.size(), prefix.c_str(), prefix.c_str(), xy_note.c_str());
    for (const CellResult& cell : report.cells) {
      std::printf("  %-3s %-2s n=%-3d m=%-3d %s%-11s mean e_opt %.3e (sd %.1e)",
                  cell.spec.profile.name().c_str(), to_string(cell.spec.reg).c_str(),
                  cell.spec.n, cell.spec.m,
                  cell.spec.step_source == JacobianSource::broyden ? "broyden " : "",
                  cell.spec.vertical && cell.spec.horizontal
                      ? "both"
                      : (cell.spec.vertical ? "vertical" : "horizontal"),
                  cell.mean_eopt, cell.std_eopt);
      if (cell.published_value > 0.0)
        std::printf("  published %.1e (factor %.2f)", cell.published_value,
                    cell.mean_eopt > cell.published_value
                        ? cell.mean_eopt / cell.published_value
                        : cell.published_value / cell.mean_eopt);
      std::printf("\n");
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency-domain EM sounding: forward modeling, regularized inversion, "
               "synthetic data, and experiment presets"};
  app.require_subcommand(1);

  ForwardArgs fa;
  CLI::App* fwd = app.add_subcommand("forward", "predict apparent conductivities for a model");
  fwd->add_option("--model", fa.model_path, "layered model JSON")->required();
  fwd->add_option("--data", fa.data_path, "data CSV used as heights/orientation template");
  fwd->add_option("--out", fa.out_path, "output data CSV")->required();
  fwd->add_option("--units", fa.units, "output units: S/m or mS/m (default S/m)");
  fwd->add_option("--m", fa.m, "height count when no --data template (preset spacing)");

  InvertArgs ia;
  CLI::App* inv = app.add_subcommand("invert", "regularized Gauss-Newton inversion");
  inv->add_option("--data", ia.data_path, "data CSV")->required();
  inv->add_option("--config", ia.config_path, "solver config JSON");
  inv->add_option("--out", ia.out_path, "result JSON path (default: stdout)");
  inv->add_option("--units", ia.units, "input units: S/m or mS/m (default S/m)");
  inv->add_option("--tau", ia.tau, "relative noise level; sets noise_norm = tau*||b||");
  inv->add_option("--L", ia.reg, "regularizer: I, D1, or D2");
  inv->add_option("--rule", ia.rule, "choice rule: discrepancy, corner, resreg, or oracle");
  inv->add_option("--jacobian", ia.jacobian, "step source: analytic, fd, or broyden");
  inv->add_option("--n", ia.n, "layer count of the reconstruction grid (default 20)");
  inv->add_option("--dbar", ia.dbar, "uniform layer thickness in m (default 2/(n-1))");

  SynthArgs sa;
  CLI::App* syn = app.add_subcommand("synth", "synthesize noisy data from a test profile");
  syn->add_option("profile", sa.profile, "test profile: f1, f2, or f3")->required();
  syn->add_option("--xi", sa.xi, "f3 step length in m (default 1.0)");
  syn->add_option("--n", sa.n, "layer count (default 20)");
  syn->add_option("--m", sa.m, "height count (default 20, preset spacing)");
  syn->add_option("--tau", sa.tau, "relative noise level (default 1e-3)");
  syn->add_option("--seed", sa.seed, "noise seed (default 1912)");
  syn->add_option("--out", sa.out_path, "output data CSV")->required();
  syn->add_option("--units", sa.units, "output units: S/m or mS/m (default S/m)");
  syn->add_flag("--vertical-only", sa.vertical_only, "vertical orientation only");
  syn->add_flag("--horizontal-only", sa.horizontal_only, "horizontal orientation only");

  BenchArgs ba;
  CLI::App* ben = app.add_subcommand("bench", "run an experiment preset");
  ben->add_option("preset", ba.preset, "table1, table2, table3, fig2, or fig56")->required();
  ben->add_option("--out", ba.out_prefix, "output file prefix (default: preset name)");
  ben->add_option("--seed", ba.seed, "master seed (default 1912)");
  ben->add_option("--tau", ba.tau, "relative noise level (default 1e-3)");
  ben->add_option("--realizations", ba.realizations, "noise realizations per cell (default 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (fwd->parsed()) return run_forward(fa);
    if (inv->parsed()) return run_invert(ia);
    if (syn->parsed()) return run_synth(sa);
    if (ben->parsed()) return run_bench(ba);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;  // unreachable: require_subcommand(1)
}
