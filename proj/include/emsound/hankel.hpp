#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace emsound {

/// Digital filter for Hankel transforms of order 0 or 1.
/// Nodes live on a log-uniform grid: lambda_i = exp(offset + i*spacing)/r.
/// The weights and the grid are inseparable; swapping filters is a
/// config-time choice, never a per-call one.
struct HankelFilter {
  int order = 0;
  double abscissa_spacing = 0.0;
  double abscissa_offset = 0.0;
  std::vector<double> weights;
  std::string source_id;

  std::size_t size() const { return weights.size(); }
  double node(std::size_t i, double r) const;
  void validate() const;
};

/// Built-in tables (see scripts/generate_hankel_filter.py). Both share the
/// same abscissa grid so one kernel sweep can feed both transform orders.
const HankelFilter& builtin_j0_filter();
const HankelFilter& builtin_j1_filter();

/// Quadrature approximation of int_0^inf f(lambda) J_nu(r*lambda) lambda dlambda.
std::complex<double> transform(const std::function<std::complex<double>(double)>& f,
                               const HankelFilter& filter, double r);

/// Plain-text table: one "abscissa weight" pair per line, '#' comments.
/// Abscissas must form a log-uniform grid for r = 1.
HankelFilter load_filter_table(const std::string& path, int order);

}  // namespace emsound
