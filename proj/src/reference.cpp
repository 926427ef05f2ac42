#include "emsound/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emsound/forward.hpp"
#include "emsound/hankel.hpp"
#include "stable.hpp"

namespace emsound::reference {

Eigen::VectorXd forward_map(const LayeredEarthModel& model, const InstrumentSetup& setup) {
  model.validate();
  setup.validate();
  const HankelFilter& f0 = builtin_j0_filter();
  const HankelFilter& f1 = builtin_j1_filter();
  const int q = static_cast<int>(f0.size());
  const double omega = setup.omega();
  const double r = setup.r;

  std::vector<double> lambda(q), imr(q);
  for (int k = 0; k < q; ++k) lambda[k] = f0.node(k, r);
  for (int k = 0; k < q; ++k) imr[k] = reflection_factor(lambda[k], model, omega).imag();

  const int m = static_cast<int>(setup.heights.size());
  Eigen::VectorXd out(setup.data_size());
  const double scale_v = 4.0 / (kMu0 * omega);
  const double scale_h = 4.0 / (kMu0 * omega * r);
  const int hoff = setup.vertical ? m : 0;
  for (int i = 0; i < m; ++i) {
    const double h = setup.heights[i];
    double accv = 0.0, acch = 0.0;
    for (int k = 0; k < q; ++k) {
      const double g = -std::exp(-2.0 * h * lambda[k]) * imr[k];
      accv += f0.weights[k] * lambda[k] * lambda[k] * g;
      acch += f1.weights[k] * lambda[k] * g;
    }
    if (setup.vertical) out[i] = scale_v * accv;
    if (setup.horizontal) out[hoff + i] = scale_h * acch;
  }
  for (int i = 0; i < out.size(); ++i)
    if (!std::isfinite(out[i])) throw std::runtime_error("forward_map: non-finite output");
  return out;
}

AdmittanceGradient admittance_gradient(double lambda, const LayeredEarthModel& model,
                                       double omega) {
  if (!(lambda > 0.0)) throw std::domain_error("admittance_gradient: lambda must be positive");
  const int n = model.layers();
  const double l2 = lambda * lambda;

  // Full n x n table: row k holds dY_{k+1}/dsigma_j after step k has run.
  Eigen::MatrixXcd table = Eigen::MatrixXcd::Zero(n, n);
  const Complex un = std::sqrt(Complex(l2, model.sigma[n - 1] * model.mu[n - 1] * omega));
  Complex y = un / Complex(0.0, model.mu[n - 1] * omega);
  table(n - 1, n - 1) = 1.0 / (2.0 * un);

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
    for (int j = k + 1; j < n; ++j) table(k, j) = nnb * table(k + 1, j);
    table(k, k) = ak / (2.0 * uk) +
                  0.5 * bk *
                      (nk * nk * model.d[k] -
                       y * (model.d[k] * y + 1.0 / Complex(0.0, model.mu[k] * omega)));
    y = nk * ak;
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
      throw std::runtime_error("admittance_gradient: non-finite value at layer " +
                               std::to_string(k + 1) + ", lambda=" + std::to_string(lambda));
  }
  AdmittanceGradient out;
  out.y1 = y;
  out.dy1 = table.row(0).transpose();
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

  Eigen::MatrixXd imd(q, n);
  for (int k = 0; k < q; ++k) {
    const AdmittanceGradient g = reference::admittance_gradient(lambda[k], model, omega);
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

}  // namespace emsound::reference
