#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace emsound {

enum class RegKind { identity, first_difference, second_difference };

struct RegularizationOperator {
  RegKind kind = RegKind::identity;
  Eigen::MatrixXd matrix;  // t x n, full row rank
  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }
};

/// identity: I_n; first_difference: (n-1) x n rows (..., -1, 1, ...);
/// second_difference: (n-2) x n rows (..., 1, -2, 1, ...).
RegularizationOperator build_operator(RegKind kind, int n);

struct SvdFactors {
  Eigen::MatrixXd U;      // M x M orthogonal
  Eigen::VectorXd gamma;  // gamma_1 >= ... >= gamma_p > 0 (numerical rank p)
  Eigen::MatrixXd V;      // n x n orthogonal
  int p = 0;              // values below 1e-14 * gamma_1 are treated as zero
};

SvdFactors svd_factors(const Eigen::MatrixXd& J);

/// s^(ell) = -sum_{i=1..ell} (u_i^T r / gamma_i) v_i, 1 <= ell <= p.
Eigen::VectorXd tsvd_step(const SvdFactors& factors, const Eigen::VectorXd& r, int ell);

/// GSVD of (J, L): J = U Sigma_J Z^-1, L = V Sigma_L Z^-1. c and s hold the
/// compact diagonals aligned with the columns of Z: c_j = ||J z_j||, and the
/// generalized values c_j/s_j are nondecreasing over the penalized block
/// j <= t. The column of U paired with z_j is j + M - n (columns j <= n - M,
/// wide case only, span the null space of J).
struct GsvdFactors {
  Eigen::MatrixXd U;     // M x M orthogonal
  Eigen::MatrixXd V;     // t x t orthogonal
  Eigen::MatrixXd Z;     // n x n nonsingular
  Eigen::MatrixXd Zinv;  // exact companion of Z (W^T R P^T), not an inverse taken later
  Eigen::VectorXd c;     // length n
  Eigen::VectorXd s;     // length n
  int m_rows = 0;        // M
  int t = 0;
  int pbar = 0;          // t when M >= n, else M - n + t
  bool tall = true;      // M >= n
};

GsvdFactors gsvd_factors(const Eigen::MatrixXd& J, const RegularizationOperator& L);

/// s^(ell) = -sum_{j=t-ell+1..n} (u'_j^T r / c_j) z_j, 0 <= ell <= pbar
/// (the tail j > t is the unpenalized block where c_j = 1 structurally).
Eigen::VectorXd tgsvd_step(const GsvdFactors& factors, const Eigen::VectorXd& r, int ell);

struct PickResult {
  int index = -1;  // position in the input sequences
  std::vector<std::string> flags;
};

/// Smallest index with residual_norm <= kappa * noise_norm; otherwise the
/// argmin with flag "discrepancy_unsatisfied".
PickResult discrepancy_pick(const std::vector<double>& residual_norms, double noise_norm,
                            double kappa = 1.5);

/// Corner of the log-log curve (residual, seminorm) by progressive pruning;
/// degenerate curves return the last index with flag "no_corner".
PickResult lcurve_corner(const std::vector<double>& residual_norms,
                         const std::vector<double>& seminorms);

/// Restricted Reginska rule: minimize psi = residual * seminorm over the
/// monotone restricted range (see implementation note); falls back to the
/// unrestricted argmin with flag "resreg_unrestricted".
PickResult resreg_pick(const std::vector<double>& residual_norms,
                       const std::vector<double>& seminorms);

}  // namespace emsound
