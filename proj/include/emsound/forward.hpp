#pragma once

#include "emsound/model.hpp"

namespace emsound {

/// N_k(lambda) = u_k/(i mu_k omega), u_k = sqrt(lambda^2 + i sigma_k mu_k omega)
/// with the principal branch (Re u_k >= 0) so that exp(-u_k z) decays.
Complex characteristic_admittance(double lambda, double sigma, double mu, double omega);

/// Y_1(lambda) by the backward recursion Y_n = N_n,
/// Y_k = N_k (Y_{k+1} + N_k tanh(d_k u_k)) / (N_k + Y_{k+1} tanh(d_k u_k)).
/// For Re(d_k u_k) > 300 the factor tanh(d_k u_k) is taken as 1 (overflow guard).
Complex surface_admittance(double lambda, const LayeredEarthModel& model, double omega);

/// R_0 = (N_0 - Y_1)/(N_0 + Y_1), N_0 evaluated with sigma_0 = 0 and mu_0 (air).
Complex reflection_factor(double lambda, const LayeredEarthModel& model, double omega);

/// Predicted apparent conductivities, stacked per the data ordering:
/// m^V(h) = (4r/mu0 omega) H_0[-lambda e^{-2h lambda} Im R_0](r),
/// m^H(h) = (4/mu0 omega) H_1[-e^{-2h lambda} Im R_0](r).
Eigen::VectorXd forward_map(const LayeredEarthModel& model, const InstrumentSetup& setup);

/// Low-induction-number (linear) model, integrated in closed form against the
/// piecewise-constant profile via the kernel antiderivatives.
Eigen::VectorXd linear_forward(const LayeredEarthModel& model, const InstrumentSetup& setup);

/// r(sigma) = b - m(sigma).
Eigen::VectorXd residual(const LayeredEarthModel& model, const InstrumentSetup& setup,
                         const SoundingData& data);

}  // namespace emsound
