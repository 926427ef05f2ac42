#pragma once

// Serial reference implementations: no OpenMP, and the admittance-gradient
// recursion materializes the full n x n table of partials instead of the
// production length-n buffer. The arithmetic per output element is identical
// to the production kernels, so results must match bit for bit; tests assert
// that, and benchmarks/bench_kernels.cpp uses these as the baseline.

#include "emsound/jacobian.hpp"

namespace emsound::reference {

Eigen::VectorXd forward_map(const LayeredEarthModel& model, const InstrumentSetup& setup);
AdmittanceGradient admittance_gradient(double lambda, const LayeredEarthModel& model,
                                       double omega);
JacobianMatrix analytic_jacobian(const LayeredEarthModel& model, const InstrumentSetup& setup);

}  // namespace emsound::reference
