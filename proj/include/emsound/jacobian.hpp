#pragma once

#include "emsound/model.hpp"

namespace emsound {

enum class JacobianSource { analytic, finite_difference, broyden };

struct JacobianMatrix {
  Eigen::MatrixXd entries;  // data_size x n, rows ordered like the residual
  JacobianSource source = JacobianSource::analytic;
  double fd_delta_scale = 0.0;  // finite_difference provenance
  int age = 0;                  // rank-one updates since the last exact evaluation
};

struct AdmittanceGradient {
  Complex y1;            // Y_1(lambda)
  Eigen::VectorXcd dy1;  // dY_1/dsigma_j, length n
};

/// Jointly computes Y_1 and all partials via the a_k/b_k recursion; a single
/// length-n buffer is overwritten per step. For Re(d_k u_k) > 300, b_k = 0.
AdmittanceGradient admittance_gradient(double lambda, const LayeredEarthModel& model,
                                       double omega);

/// d r_i / d sigma_j: Hankel transforms (order 0 vertical, 1 horizontal) of
/// lambda e^{-2 h_i lambda} Im(dR_0/dsigma_j) and e^{-2 h_i lambda} Im(dR_0/dsigma_j),
/// scaled by 4r/(mu0 omega) and 4/(mu0 omega), with
/// dR_0/dsigma_j = -2 i mu0 omega lambda / (lambda + i mu0 omega Y_1)^2 * dY_1/dsigma_j.
JacobianMatrix analytic_jacobian(const LayeredEarthModel& model, const InstrumentSetup& setup);

/// Forward-difference columns of the residual; per-column step
/// delta_j = delta_scale * max(sigma_j, 1).
JacobianMatrix fd_jacobian(const LayeredEarthModel& model, const InstrumentSetup& setup,
                           const SoundingData& data, double delta_scale = 1e-7);

/// J <- J + (y - J s) s^T / (s^T s); increments the provenance age.
void broyden_update(JacobianMatrix& jac, const Eigen::VectorXd& s, const Eigen::VectorXd& y);

}  // namespace emsound
