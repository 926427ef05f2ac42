#include "emsound/forward.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emsound/hankel.hpp"
#include "stable.hpp"

namespace emsound {

Complex characteristic_admittance(double lambda, double sigma, double mu, double omega) {
  const Complex u = std::sqrt(Complex(lambda * lambda, sigma * mu * omega));
  return u / Complex(0.0, mu * omega);
}

Complex surface_admittance(double lambda, const LayeredEarthModel& model, double omega) {
  const int n = model.layers();
  const double l2 = lambda * lambda;
  const Complex un = std::sqrt(Complex(l2, model.sigma[n - 1] * model.mu[n - 1] * omega));
  Complex y = un / Complex(0.0, model.mu[n - 1] * omega);
  for (int k = n - 2; k >= 0; --k) {
    const Complex uk = std::sqrt(Complex(l2, model.sigma[k] * model.mu[k] * omega));
    const Complex nk = uk / Complex(0.0, model.mu[k] * omega);
    const Complex du = model.d[k] * uk;
    const Complex th = (du.real() > detail::kOpaque) ? Complex(1.0, 0.0) : detail::stable_tanh(du);
    const Complex ak = (y + nk * th) / (nk + y * th);
    y = nk * ak;
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
      throw std::runtime_error("surface_admittance: non-finite value propagating layer " +
                               std::to_string(k + 1));
  }
  return y;
}

Complex reflection_factor(double lambda, const LayeredEarthModel& model, double omega) {
  // N0 = lambda / (i mu0 omega); multiplying numerator and denominator of
  // (N0 - Y1)/(N0 + Y1) by i mu0 omega keeps the arithmetic real where possible.
  const Complex y1 = surface_admittance(lambda, model, omega);
  const Complex scaled = Complex(0.0, kMu0 * omega) * y1;
  return (lambda - scaled) / (lambda + scaled);
}

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
#pragma omp parallel for schedule(static)
  for (int k = 0; k < q; ++k) imr[k] = reflection_factor(lambda[k], model, omega).imag();

  const int m = static_cast<int>(setup.heights.size());
  Eigen::VectorXd out(setup.data_size());
  const double scale_v = 4.0 / (kMu0 * omega);
  const double scale_h = 4.0 / (kMu0 * omega * r);
  const int hoff = setup.vertical ? m : 0;
#pragma omp parallel for schedule(static)
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

namespace {

// Antiderivatives of the two low-induction sensitivity kernels, in units of r.
// The horizontal one is written as -1/(2z + sqrt(4z^2+1)) to avoid cancellation
// at large depth; both tend to 0 from below as z -> infinity.
double phi_v(double z) { return -1.0 / std::sqrt(4.0 * z * z + 1.0); }
double phi_h(double z) { return -1.0 / (2.0 * z + std::sqrt(4.0 * z * z + 1.0)); }

}  // namespace

Eigen::VectorXd linear_forward(const LayeredEarthModel& model, const InstrumentSetup& setup) {
  model.validate();
  setup.validate();
  const int n = model.layers();
  const int m = static_cast<int>(setup.heights.size());
  const double r = setup.r;

  std::vector<double> top(n);  // depth of each interface below the surface
  top[0] = 0.0;
  for (int k = 1; k < n; ++k) top[k] = top[k - 1] + model.d[k - 1];

  Eigen::VectorXd out(setup.data_size());
  const int hoff = setup.vertical ? m : 0;
  for (int i = 0; i < m; ++i) {
    const double h = setup.heights[i];
    double mv = 0.0, mh = 0.0;
    for (int k = 0; k < n; ++k) {
      const double za = (top[k] + h) / r;
      if (k + 1 < n) {
        const double zb = (top[k + 1] + h) / r;
        mv += model.sigma[k] * (phi_v(zb) - phi_v(za));
        mh += model.sigma[k] * (phi_h(zb) - phi_h(za));
      } else {
        mv += model.sigma[k] * (0.0 - phi_v(za));  // bottom half-space
        mh += model.sigma[k] * (0.0 - phi_h(za));
      }
    }
    if (setup.vertical) out[i] = mv;
    if (setup.horizontal) out[hoff + i] = mh;
  }
  return out;
}

Eigen::VectorXd residual(const LayeredEarthModel& model, const InstrumentSetup& setup,
                         const SoundingData& data) {
  data.validate();
  if (data.vertical != setup.vertical || data.horizontal != setup.horizontal)
    throw std::invalid_argument("residual: data and setup orientations disagree");
  if (data.b.size() != setup.data_size())
    throw std::invalid_argument("residual: data length does not match setup");
  return data.b - forward_map(model, setup);
}

}  // namespace emsound
