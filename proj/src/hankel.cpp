#include "emsound/hankel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace emsound {

double HankelFilter::node(std::size_t i, double r) const {
  return std::exp(abscissa_offset + abscissa_spacing * static_cast<double>(i)) / r;
}

void HankelFilter::validate() const {
  if (order != 0 && order != 1) throw std::invalid_argument("filter: order must be 0 or 1");
  if (!(abscissa_spacing > 0.0))
    throw std::invalid_argument("filter: abscissa spacing must be positive");
  if (weights.empty()) throw std::invalid_argument("filter: no weights");
  for (double w : weights)
    if (!std::isfinite(w)) throw std::invalid_argument("filter: non-finite weight");
}

std::complex<double> transform(const std::function<std::complex<double>(double)>& f,
                               const HankelFilter& filter, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::domain_error("transform: r must be positive and finite");
  filter.validate();
  std::complex<double> acc(0.0, 0.0);
  const int q = static_cast<int>(filter.size());
  for (int i = 0; i < q; ++i) {
    const double lambda = filter.node(i, r);
    const std::complex<double> v = f(lambda);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("transform: non-finite integrand at node " + std::to_string(i) +
                               " (lambda=" + std::to_string(lambda) + ")");
    acc += filter.weights[i] * v * lambda;
  }
  return acc / r;
}

HankelFilter load_filter_table(const std::string& path, int order) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<double> abscissa, weights;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ss(line);
    double a = 0.0, w = 0.0;
    if (!(ss >> a >> w))
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected \"abscissa weight\"");
    if (!(a > 0.0)) throw std::invalid_argument(path + ": abscissas must be positive");
    abscissa.push_back(a);
    weights.push_back(w);
  }
  if (abscissa.size() < 2) throw std::invalid_argument(path + ": need at least two rows");
  // The table must be log-uniform or the shifted reuse of one response breaks down.
  const double spacing = std::log(abscissa[1] / abscissa[0]);
  for (std::size_t i = 0; i + 1 < abscissa.size(); ++i)
    if (std::abs(std::log(abscissa[i + 1] / abscissa[i]) - spacing) > 1e-6)
      throw std::invalid_argument(path + ": abscissas must be uniform in log");
  HankelFilter filter{order, spacing, std::log(abscissa[0]), std::move(weights), path};
  filter.validate();
  return filter;
}

}  // namespace emsound
