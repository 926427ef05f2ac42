#include "emsound/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "emsound/forward.hpp"

namespace emsound {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::max_iter: return "max_iter";
    case Termination::alpha_floor: return "alpha_floor";
    case Termination::aborted: return "aborted";
  }
  return "unknown";
}

std::string to_string(ChoiceRule r) {
  switch (r) {
    case ChoiceRule::discrepancy: return "discrepancy";
    case ChoiceRule::lcurve: return "corner";
    case ChoiceRule::resreg: return "resreg";
    case ChoiceRule::oracle: return "oracle";
  }
  return "unknown";
}

std::string to_string(JacobianSource s) {
  switch (s) {
    case JacobianSource::analytic: return "analytic";
    case JacobianSource::finite_difference: return "fd";
    case JacobianSource::broyden: return "broyden";
  }
  return "unknown";
}

std::string to_string(RegKind k) {
  switch (k) {
    case RegKind::identity: return "I";
    case RegKind::first_difference: return "D1";
    case RegKind::second_difference: return "D2";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  if (!(stop_tol > 0.0)) throw std::invalid_argument("config: stop_tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("config: max_iter must be at least 1");
  if (!(alpha_min > 0.0) || !(alpha_min < 1.0))
    throw std::invalid_argument("config: alpha_min must lie in (0, 1)");
  if (!(fd_delta_scale > 0.0)) throw std::invalid_argument("config: fd delta must be positive");
  if (broyden_refresh < 1) throw std::invalid_argument("config: broyden refresh must be >= 1");
  if (!(kappa > 1.0)) throw std::invalid_argument("config: kappa must exceed 1");
  if (!(noise_norm >= 0.0)) throw std::invalid_argument("config: noise norm must be >= 0");
  for (int i = 0; i < initial_sigma.size(); ++i)
    if (!(initial_sigma[i] > 0.0))
      throw std::invalid_argument("config: initial sigma must be strictly positive");
}

LineSearchResult armijo_step(const Eigen::VectorXd& sigma, const Eigen::VectorXd& step,
                             const Eigen::VectorXd& current_residual, const Eigen::MatrixXd& J,
                             const ResidualFn& residual_fn, double alpha_min) {
  if (step.size() != sigma.size()) throw std::invalid_argument("armijo_step: size mismatch");
  const double rr = current_residual.squaredNorm();
  const double js2 = (J * step).squaredNorm();
  for (double alpha = 1.0; alpha >= alpha_min; alpha *= 0.5) {
    const Eigen::VectorXd trial = sigma + alpha * step;
    if (!(trial.array() > 0.0).all()) continue;
    Eigen::VectorXd rt;
    try {
      rt = residual_fn(trial);
    } catch (const std::exception&) {
      continue;  // failed evaluation rejects this alpha
    }
    if (!rt.allFinite()) continue;
    if (rr - rt.squaredNorm() >= 0.5 * alpha * js2) return {alpha, true, std::move(rt)};
  }
  return {0.0, false, {}};
}

namespace {

Eigen::VectorXd default_initial_sigma(const SoundingData& data, int n) {
  const double mean = data.b.mean();
  return Eigen::VectorXd::Constant(n, std::clamp(mean, 1e-3, 1.0));
}

Eigen::VectorXd starting_sigma(const SolverConfig& config, const SoundingData& data, int n) {
  if (config.initial_sigma.size() == 0) return default_initial_sigma(data, n);
  if (config.initial_sigma.size() != n)
    throw std::invalid_argument("config: initial sigma has wrong length");
  return config.initial_sigma;
}

JacobianMatrix exact_jacobian(const SolverConfig& config, const LayeredEarthModel& model,
                              const InstrumentSetup& setup, const SoundingData& data) {
  // Broyden's "exact" refresh is the analytic Jacobian.
  if (config.step_source == JacobianSource::finite_difference)
    return fd_jacobian(model, setup, data, config.fd_delta_scale);
  return analytic_jacobian(model, setup);
}

}  // namespace

EllRecord solve_one_ell(const SolverConfig& config, const InstrumentSetup& setup,
                        const SoundingData& data, const Eigen::VectorXd& thickness, int ell) {
  config.validate();
  setup.validate();
  data.validate();
  const int n = static_cast<int>(thickness.size()) + 1;

  EllRecord rec;
  rec.ell = ell;
  LayeredEarthModel model = make_model(starting_sigma(config, data, n), thickness);
  rec.sigma = model.sigma;

  const bool use_tsvd = (config.regularizer == RegKind::identity);
  const RegularizationOperator L = build_operator(config.regularizer, n);
  const ResidualFn rf = [&](const Eigen::VectorXd& s) {
    LayeredEarthModel trial = model;
    trial.sigma = s;
    return residual(trial, setup, data);
  };

  Eigen::VectorXd r;
  JacobianMatrix J;
  try {
    r = rf(model.sigma);
    if (!r.allFinite()) throw std::runtime_error("non-finite initial residual");
    J = exact_jacobian(config, model, setup, data);
  } catch (const std::exception& e) {
    rec.termination = Termination::aborted;
    rec.diagnostic = std::string("initial evaluation failed: ") + e.what();
    return rec;
  }
  rec.residual_norm = r.norm();
  rec.seminorm = (L.matrix * model.sigma).norm();

  int alpha1_fail_streak = 0;
  for (int k = 1; k <= config.max_iter; ++k) {
    Eigen::VectorXd step;
    try {
      if (use_tsvd) {
        const SvdFactors F = svd_factors(J.entries);
        if (F.p == 0) throw std::runtime_error("Jacobian has numerical rank zero");
        int le = ell;
        if (le > F.p) {
          le = F.p;
          if (rec.diagnostic.empty())
            rec.diagnostic = "ell clamped to numerical rank " + std::to_string(F.p) +
                             " at iteration " + std::to_string(k);
        }
        step = tsvd_step(F, r, le);
      } else {
        const GsvdFactors F = gsvd_factors(J.entries, L);
        step = tgsvd_step(F, r, ell);
      }
    } catch (const std::exception& e) {
      rec.termination = Termination::aborted;
      rec.diagnostic = "factorization failed at iteration " + std::to_string(k) + ": " + e.what();
      return rec;
    }

    const LineSearchResult ls =
        armijo_step(model.sigma, step, r, J.entries, rf, config.alpha_min);
    if (!ls.accepted) {
      rec.termination = Termination::alpha_floor;
      return rec;
    }
    const Eigen::VectorXd delta = ls.alpha * step;
    const Eigen::VectorXd y = ls.trial_residual - r;
    model.sigma += delta;
    r = ls.trial_residual;
    rec.iterations = k;
    rec.sigma = model.sigma;
    rec.residual_norm = r.norm();
    rec.seminorm = (L.matrix * model.sigma).norm();
    rec.history.push_back({ls.alpha, rec.residual_norm, step.norm()});

    if (ls.alpha < 1.0)
      ++alpha1_fail_streak;
    else
      alpha1_fail_streak = 0;

    if (delta.norm() < config.stop_tol * model.sigma.norm()) {
      rec.termination = Termination::converged;
      return rec;
    }
    if (k == config.max_iter) break;

    try {
      if (config.step_source == JacobianSource::broyden) {
        if (J.age + 1 >= config.broyden_refresh || alpha1_fail_streak >= 2) {
          J = analytic_jacobian(model, setup);
          alpha1_fail_streak = 0;
        } else {
          broyden_update(J, delta, y);
        }
      } else {
        J = exact_jacobian(config, model, setup, data);
      }
    } catch (const std::exception& e) {
      rec.termination = Termination::aborted;
      rec.diagnostic =
          "Jacobian evaluation failed after iteration " + std::to_string(k) + ": " + e.what();
      return rec;
    }
  }
  rec.termination = Termination::max_iter;
  return rec;
}

InversionResult solve(const SolverConfig& config, const InstrumentSetup& setup,
                      const SoundingData& data, const Eigen::VectorXd& thickness) {
  config.validate();
  setup.validate();
  data.validate();
  const int n = static_cast<int>(thickness.size()) + 1;
  if (config.choice_rule == ChoiceRule::oracle && config.oracle_sigma.size() != n)
    throw std::invalid_argument("solve: oracle rule needs oracle_sigma of length n");

  InversionResult out;
  out.initial_sigma = starting_sigma(config, data, n);

  std::vector<int> ells = config.ell_range;
  if (ells.empty()) {
    if (config.regularizer == RegKind::identity) {
      LayeredEarthModel m0 = make_model(out.initial_sigma, thickness);
      const JacobianMatrix J0 = exact_jacobian(config, m0, setup, data);
      const int p = svd_factors(J0.entries).p;
      for (int ell = 1; ell <= p; ++ell) ells.push_back(ell);
      if (ells.empty()) throw std::runtime_error("solve: initial Jacobian has rank zero");
    } else {
      const RegularizationOperator L = build_operator(config.regularizer, n);
      const int M = static_cast<int>(data.b.size());
      const int pbar = (M >= n) ? L.rows() : M - n + L.rows();
      if (pbar < 0) throw std::invalid_argument("solve: no admissible truncation indices");
      for (int ell = 0; ell <= pbar; ++ell) ells.push_back(ell);
    }
  } else {
    std::sort(ells.begin(), ells.end());
    ells.erase(std::unique(ells.begin(), ells.end()), ells.end());
  }

  out.per_ell.resize(ells.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(ells.size()); ++i)
    out.per_ell[i] = solve_one_ell(config, setup, data, thickness, ells[i]);

  std::vector<int> ok;
  for (int i = 0; i < static_cast<int>(out.per_ell.size()); ++i)
    if (out.per_ell[i].termination != Termination::aborted) ok.push_back(i);
  if (ok.empty()) throw std::runtime_error("solve: every ell run aborted");

  std::vector<double> res, semi;
  for (int i : ok) {
    res.push_back(out.per_ell[i].residual_norm);
    semi.push_back(out.per_ell[i].seminorm);
  }

  PickResult pick;
  switch (config.choice_rule) {
    case ChoiceRule::discrepancy: {
      const double noise =
          config.noise_norm > 0.0 ? config.noise_norm : data.noise_estimate.value_or(0.0);
      pick = discrepancy_pick(res, noise, config.kappa);
      break;
    }
    case ChoiceRule::lcurve:
      if (ok.size() < 3) {
        pick.index = static_cast<int>(ok.size()) - 1;
        pick.flags = {"no_corner", "short_curve"};
      } else {
        pick = lcurve_corner(res, semi);
      }
      break;
    case ChoiceRule::resreg:
      if (ok.size() < 2) {
        pick.index = 0;
        pick.flags = {"resreg_short_curve"};
      } else {
        pick = resreg_pick(res, semi);
      }
      break;
    case ChoiceRule::oracle: {
      const double tn = config.oracle_sigma.norm();
      pick.index = 0;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < ok.size(); ++i) {
        const double e = (config.oracle_sigma - out.per_ell[ok[i]].sigma).norm() / tn;
        if (e < best) {
          best = e;
          pick.index = static_cast<int>(i);
        }
      }
      break;
    }
  }

  out.chosen_index = ok[pick.index];
  out.chosen_ell = out.per_ell[out.chosen_index].ell;
  out.chosen_sigma = out.per_ell[out.chosen_index].sigma;
  out.flags = pick.flags;
  return out;
}

namespace {

JacobianSource source_from(const std::string& s) {
  if (s == "analytic") return JacobianSource::analytic;
  if (s == "fd") return JacobianSource::finite_difference;
  if (s == "broyden") return JacobianSource::broyden;
  throw std::invalid_argument("config: unknown step_source \"" + s + "\"");
}

RegKind reg_from(const std::string& s) {
  if (s == "I") return RegKind::identity;
  if (s == "D1") return RegKind::first_difference;
  if (s == "D2") return RegKind::second_difference;
  throw std::invalid_argument("config: unknown regularizer \"" + s + "\"");
}

ChoiceRule rule_from(const std::string& s) {
  if (s == "discrepancy") return ChoiceRule::discrepancy;
  if (s == "corner") return ChoiceRule::lcurve;
  if (s == "resreg") return ChoiceRule::resreg;
  if (s == "oracle") return ChoiceRule::oracle;
  throw std::invalid_argument("config: unknown choice rule \"" + s + "\"");
}

Eigen::VectorXd vector_from(const nlohmann::json& j) {
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

}  // namespace

SolverConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, true);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  SolverConfig c;
  if (j.contains("step_source")) c.step_source = source_from(j["step_source"].get<std::string>());
  if (j.contains("fd_delta_scale")) c.fd_delta_scale = j["fd_delta_scale"].get<double>();
  if (j.contains("broyden_refresh")) c.broyden_refresh = j["broyden_refresh"].get<int>();
  if (j.contains("regularizer")) c.regularizer = reg_from(j["regularizer"].get<std::string>());
  if (j.contains("ell_range")) {
    for (const auto& e : j["ell_range"]) c.ell_range.push_back(e.get<int>());
  }
  if (j.contains("stop_tol")) c.stop_tol = j["stop_tol"].get<double>();
  if (j.contains("max_iter")) c.max_iter = j["max_iter"].get<int>();
  if (j.contains("alpha_min")) c.alpha_min = j["alpha_min"].get<double>();
  if (j.contains("initial_sigma")) c.initial_sigma = vector_from(j["initial_sigma"]);
  if (j.contains("choice_rule")) c.choice_rule = rule_from(j["choice_rule"].get<std::string>());
  if (j.contains("kappa")) c.kappa = j["kappa"].get<double>();
  if (j.contains("noise_norm")) c.noise_norm = j["noise_norm"].get<double>();
  if (j.contains("oracle_sigma")) c.oracle_sigma = vector_from(j["oracle_sigma"]);
  c.validate();
  return c;
}

std::string result_to_json(const InversionResult& result, const SolverConfig& config) {
  nlohmann::json j;
  j["config"] = {{"step_source", to_string(config.step_source)},
                 {"regularizer", to_string(config.regularizer)},
                 {"choice_rule", to_string(config.choice_rule)},
                 {"stop_tol", config.stop_tol},
                 {"max_iter", config.max_iter},
                 {"alpha_min", config.alpha_min},
                 {"kappa", config.kappa},
                 {"noise_norm", config.noise_norm},
                 {"fd_delta_scale", config.fd_delta_scale},
                 {"broyden_refresh", config.broyden_refresh}};
  j["initial_sigma"] = std::vector<double>(result.initial_sigma.begin(),
                                           result.initial_sigma.end());
  j["chosen_ell"] = result.chosen_ell;
  j["chosen_index"] = result.chosen_index;
  j["flags"] = result.flags;
  j["chosen_sigma"] =
      std::vector<double>(result.chosen_sigma.begin(), result.chosen_sigma.end());
  j["per_ell"] = nlohmann::json::array();
  for (const EllRecord& rec : result.per_ell) {
    nlohmann::json e;
    e["ell"] = rec.ell;
    e["termination"] = to_string(rec.termination);
    e["iterations"] = rec.iterations;
    e["residual_norm"] = rec.residual_norm;
    e["seminorm"] = rec.seminorm;
    if (!rec.diagnostic.empty()) e["diagnostic"] = rec.diagnostic;
    e["sigma"] = std::vector<double>(rec.sigma.begin(), rec.sigma.end());
    e["history"] = nlohmann::json::array();
    for (const IterationRecord& it : rec.history)
      e["history"].push_back({{"alpha", it.alpha},
                              {"residual_norm", it.residual_norm},
                              {"step_norm", it.step_norm}});
    j["per_ell"].push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace emsound
