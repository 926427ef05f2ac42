#include "emsound/jacobian.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emsound/forward.hpp"
#include "emsound/hankel.hpp"
#include "stable.hpp"

namespace emsound {

AdmittanceGradient admittance_gradient(double lambda, const LayeredEarthModel& model,
                                       double omega) {
  if (!(lambda > 0.0)) throw std::domain_error("admittance_gradient: lambda must be positive");
  const int n = model.layers();
  const double l2 = lambda * lambda;

  AdmittanceGradient out;
  out.dy1 = Eigen::VectorXcd::Zero(n);
  const Complex un = std::sqrt(Complex(l2, model.sigma[n - 1] * model.mu[n - 1] * omega));
  Complex y = un / Complex(0.0, model.mu[n - 1] * omega);
  out.dy1[n - 1] = 1.0 / (2.0 * un);

  for (int k = n - 2; k >= 0; --k) {
    const Complex uk = std::sqrt(Complex(l2, model.sigma[k] * model.mu[k] * omega));
    const Complex nk = uk / Complex(0.0, model.mu[k] * omega);
    const Complex du = model.d[k] * uk;
    Complex th, sech2;
    if (du.real() > detail::kOpaque) {
      th = Complex(1.0, 0.0);
      sech2 = Complex(0.0, 0.0);
    } else {
      th = detail::stable_tanh(du);
      sech2 = detail::stable_sech2(du);
    }
    const Complex den = nk + y * th;
    const Complex ak = (y + nk * th) / den;
    const Complex bk = sech2 / (den * den);
    const Complex nnb = nk * nk * bk;
    for (int j = k + 1; j < n; ++j) out.dy1[j] = nnb * out.dy1[j];
    out.dy1[k] = ak / (2.0 * uk) +
                 0.5 * bk *
                     (nk * nk * model.d[k] -
                      y * (model.d[k] * y + 1.0 / Complex(0.0, model.mu[k] * omega)));
    y = nk * ak;
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
      throw std::runtime_error("admittance_gradient: non-finite value at layer " +
                               std::to_string(k + 1) + ", lambda=" + std::to_string(lambda));
  }
  out.y1 = y;
  return out;
}

JacobianMatrix analytic_jacobian(const LayeredEarthModel& model, const InstrumentSetup& setup) {
  model.validate();
  setup.validate();
  const HankelFilter& f0 = builtin_j0_filter();
  const HankelFilter& f1 = builtin_j1_filter();
  const int q = static_cast<int>(f0.size());
  const int n = model.layers();
  const int m = static_cast<int>(setup.heights.size());
  const double omega = setup.omega();
  const double r = setup.r;

  std::vector<double> lambda(q);
  for (int k = 0; k < q; ++k) lambda[k] = f0.node(k, r);

  Eigen::MatrixXd imd(q, n);  // Im(dR0/dsigma_j) sampled on the node grid
#pragma omp parallel for schedule(static)
  for (int k = 0; k < q; ++k) {
    const AdmittanceGradient g = admittance_gradient(lambda[k], model, omega);
    const Complex den = lambda[k] + Complex(0.0, kMu0 * omega) * g.y1;
    const Complex pref = Complex(0.0, -2.0 * kMu0 * omega) * lambda[k] / (den * den);
    for (int j = 0; j < n; ++j) imd(k, j) = (pref * g.dy1[j]).imag();
  }

  JacobianMatrix jac;
  jac.source = JacobianSource::analytic;
  jac.entries.resize(setup.data_size(), n);
  const double scale_v = 4.0 / (kMu0 * omega);
  const double scale_h = 4.0 / (kMu0 * omega * r);
  const int hoff = setup.vertical ? m : 0;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) {
    std::vector<double> e(q);
    for (int k = 0; k < q; ++k) e[k] = std::exp(-2.0 * setup.heights[i] * lambda[k]);
    for (int j = 0; j < n; ++j) {
      double accv = 0.0, acch = 0.0;
      for (int k = 0; k < q; ++k) {
        const double g = e[k] * imd(k, j);
        accv += f0.weights[k] * lambda[k] * lambda[k] * g;
        acch += f1.weights[k] * lambda[k] * g;
      }
      if (setup.vertical) jac.entries(i, j) = scale_v * accv;
      if (setup.horizontal) jac.entries(hoff + i, j) = scale_h * acch;
    }
  }
  if (!jac.entries.allFinite()) throw std::runtime_error("analytic_jacobian: non-finite entries");
  return jac;
}

JacobianMatrix fd_jacobian(const LayeredEarthModel& model, const InstrumentSetup& setup,
                           const SoundingData& data, double delta_scale) {
  if (!(delta_scale > 0.0)) throw std::invalid_argument("fd_jacobian: delta must be positive");
  const Eigen::VectorXd r0 = residual(model, setup, data);
  const int n = model.layers();
  JacobianMatrix jac;
  jac.source = JacobianSource::finite_difference;
  jac.fd_delta_scale = delta_scale;
  jac.entries.resize(r0.size(), n);
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < n; ++j) {
    const double step = delta_scale * std::max(model.sigma[j], 1.0);
    LayeredEarthModel pert = model;
    pert.sigma[j] += step;
    jac.entries.col(j) = (residual(pert, setup, data) - r0) / step;
  }
  return jac;
}

void broyden_update(JacobianMatrix& jac, const Eigen::VectorXd& s, const Eigen::VectorXd& y) {
  const double ss = s.squaredNorm();
  if (!(ss > 0.0)) throw std::invalid_argument("broyden_update: zero step");
  if (s.size() != jac.entries.cols() || y.size() != jac.entries.rows())
    throw std::invalid_argument("broyden_update: dimension mismatch");
  jac.entries.noalias() += (y - jac.entries * s) * (s.transpose() / ss);
  jac.source = JacobianSource::broyden;
  ++jac.age;
}

}  // namespace emsound
