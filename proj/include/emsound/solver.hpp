#pragma once

#include <functional>
#include <string>
#include <vector>

#include "emsound/jacobian.hpp"
#include "emsound/regularize.hpp"

namespace emsound {

enum class ChoiceRule { discrepancy, lcurve, resreg, oracle };
enum class Termination { converged, max_iter, alpha_floor, aborted };

std::string to_string(Termination t);
std::string to_string(ChoiceRule r);
std::string to_string(JacobianSource s);
std::string to_string(RegKind k);

struct SolverConfig {
  JacobianSource step_source = JacobianSource::analytic;
  double fd_delta_scale = 1e-7;  // finite_difference source
  int broyden_refresh = 10;      // k_B: exact Jacobian every k_B iterations
  RegKind regularizer = RegKind::identity;
  std::vector<int> ell_range;    // empty: all admissible (1..p TSVD, 0..pbar TGSVD)
  double stop_tol = 1e-4;        // relative-change stopping tolerance
  int max_iter = 100;
  double alpha_min = 1e-5;
  Eigen::VectorXd initial_sigma;  // empty: constant clamp(mean(b), 1e-3, 1)
  ChoiceRule choice_rule = ChoiceRule::lcurve;
  double kappa = 1.5;             // discrepancy principle threshold factor
  double noise_norm = 0.0;        // ||e|| for the discrepancy rule
  Eigen::VectorXd oracle_sigma;   // exact solution, oracle rule only

  void validate() const;
};

struct IterationRecord {
  double alpha = 0.0;
  double residual_norm = 0.0;  // after the accepted update
  double step_norm = 0.0;      // undamped ||s^(ell)||
};

struct EllRecord {
  int ell = 0;
  Eigen::VectorXd sigma;
  Termination termination = Termination::aborted;
  int iterations = 0;
  double residual_norm = 0.0;
  double seminorm = 0.0;  // ||L sigma||
  std::string diagnostic;
  std::vector<IterationRecord> history;
};

struct InversionResult {
  std::vector<EllRecord> per_ell;
  int chosen_index = -1;  // into per_ell; -1 when every ell aborted
  int chosen_ell = -1;
  Eigen::VectorXd chosen_sigma;
  std::vector<std::string> flags;
  Eigen::VectorXd initial_sigma;  // recorded for reproducibility
};

struct LineSearchResult {
  double alpha = 0.0;
  bool accepted = false;
  Eigen::VectorXd trial_residual;  // r(sigma + alpha s), valid when accepted
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Largest alpha in {1, 1/2, 1/4, ...} >= alpha_min with
/// ||r(sigma)||^2 - ||r(sigma + alpha s)||^2 >= alpha/2 * ||J s||^2 and
/// sigma + alpha s > 0 componentwise. A non-finite (or throwing) trial
/// residual rejects that alpha and the halving continues.
LineSearchResult armijo_step(const Eigen::VectorXd& sigma, const Eigen::VectorXd& step,
                             const Eigen::VectorXd& current_residual, const Eigen::MatrixXd& J,
                             const ResidualFn& residual_fn, double alpha_min = 1e-5);

/// Damped Gauss-Newton for a single truncation index. Layer geometry is fixed:
/// n = thickness.size() + 1 layers, uniform mu0.
EllRecord solve_one_ell(const SolverConfig& config, const InstrumentSetup& setup,
                        const SoundingData& data, const Eigen::VectorXd& thickness, int ell);

/// Full ell sweep (independent runs, no warm starting) plus the choice rule.
InversionResult solve(const SolverConfig& config, const InstrumentSetup& setup,
                      const SoundingData& data, const Eigen::VectorXd& thickness);

SolverConfig config_from_json_file(const std::string& path);
std::string result_to_json(const InversionResult& result, const SolverConfig& config);

}  // namespace emsound
