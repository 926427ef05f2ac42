#include "emsound/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace emsound {

void LayeredEarthModel::validate() const {
  const int n = layers();
  if (n < 1) throw std::invalid_argument("model: at least one layer required");
  if (d.size() != n - 1)
    throw std::invalid_argument("model: thickness count must be layers-1, got " +
                                std::to_string(d.size()) + " for " + std::to_string(n) +
                                " layers");
  if (mu.size() != n) throw std::invalid_argument("model: permeability count must equal layers");
  for (int k = 0; k < n; ++k) {
    if (!(sigma[k] >= 0.0) || !std::isfinite(sigma[k]))
      throw std::invalid_argument("model: sigma_" + std::to_string(k + 1) +
                                  " must be finite and non-negative");
    if (!(mu[k] > 0.0) || !std::isfinite(mu[k]))
      throw std::invalid_argument("model: mu_" + std::to_string(k + 1) + " must be positive");
  }
  for (int k = 0; k + 1 < n; ++k)
    if (!(d[k] > 0.0) || !std::isfinite(d[k]))
      throw std::invalid_argument("model: d_" + std::to_string(k + 1) + " must be positive");
}

LayeredEarthModel make_model(Eigen::VectorXd sigma, Eigen::VectorXd d) {
  LayeredEarthModel model;
  model.mu = Eigen::VectorXd::Constant(sigma.size(), kMu0);
  model.sigma = std::move(sigma);
  model.d = std::move(d);
  model.validate();
  return model;
}

void InstrumentSetup::validate() const {
  if (!(r > 0.0)) throw std::invalid_argument("setup: coil distance r must be positive");
  if (!(f > 0.0)) throw std::invalid_argument("setup: frequency f must be positive");
  if (heights.empty()) throw std::invalid_argument("setup: at least one height required");
  if (!vertical && !horizontal)
    throw std::invalid_argument("setup: at least one orientation required");
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (!(heights[i] >= 0.0) || !std::isfinite(heights[i]))
      throw std::invalid_argument("setup: heights must be non-negative");
    if (i > 0 && !(heights[i] > heights[i - 1]))
      throw std::invalid_argument("setup: heights must be strictly increasing");
  }
}

void SoundingData::validate() const {
  if (!vertical && !horizontal)
    throw std::invalid_argument("data: at least one orientation required");
  if (heights.empty()) throw std::invalid_argument("data: at least one height required");
  const int expected = blocks() * static_cast<int>(heights.size());
  if (b.size() != expected)
    throw std::invalid_argument("data: expected " + std::to_string(expected) +
                                " stacked values, got " + std::to_string(b.size()));
  if (noise_estimate && !(*noise_estimate >= 0.0))
    throw std::invalid_argument("data: noise estimate must be non-negative");
}

InstrumentSetup setup_for(const SoundingData& data, double r, double f) {
  InstrumentSetup setup;
  setup.r = r;
  setup.f = f;
  setup.heights = data.heights;
  setup.vertical = data.vertical;
  setup.horizontal = data.horizontal;
  setup.validate();
  return setup;
}

double skin_depth(double sigma_ref, const InstrumentSetup& setup) {
  if (!(sigma_ref > 0.0)) throw std::invalid_argument("skin depth needs sigma > 0");
  return std::sqrt(2.0 / (sigma_ref * kMu0 * setup.omega()));
}

double induction_number(double sigma_ref, const InstrumentSetup& setup) {
  return setup.r / skin_depth(sigma_ref, setup);
}

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return nlohmann::json::parse(in, nullptr, true, true);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Eigen::VectorXd to_vector(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

}  // namespace

LayeredEarthModel read_model_json(const std::string& path) {
  const nlohmann::json j = load_json(path);
  if (!j.contains("sigma")) throw std::invalid_argument(path + ": missing \"sigma\"");
  LayeredEarthModel model;
  model.sigma = to_vector(j["sigma"], "sigma");
  model.d = j.contains("d") ? to_vector(j["d"], "d") : Eigen::VectorXd(0);
  model.mu = j.contains("mu") ? to_vector(j["mu"], "mu")
                              : Eigen::VectorXd::Constant(model.sigma.size(), kMu0);
  model.validate();
  return model;
}

void write_model_json(const std::string& path, const LayeredEarthModel& model) {
  model.validate();
  nlohmann::json j;
  j["sigma"] = std::vector<double>(model.sigma.begin(), model.sigma.end());
  j["d"] = std::vector<double>(model.d.begin(), model.d.end());
  j["mu"] = std::vector<double>(model.mu.begin(), model.mu.end());
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

SoundingData read_data_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<double> hv, hh, bv, bh;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    if (lineno == 1 && line.find("height") != std::string::npos) continue;  // header
    std::istringstream ss(line);
    std::string height_s, orient_s, value_s;
    if (!std::getline(ss, height_s, ',') || !std::getline(ss, orient_s, ',') ||
        !std::getline(ss, value_s, ','))
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected height_m,orientation,value");
    const double h = std::stod(height_s);
    const double v = std::stod(value_s);
    orient_s.erase(std::remove_if(orient_s.begin(), orient_s.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   orient_s.end());
    if (orient_s == "V" || orient_s == "v") {
      hv.push_back(h);
      bv.push_back(v);
    } else if (orient_s == "H" || orient_s == "h") {
      hh.push_back(h);
      bh.push_back(v);
    } else {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": orientation must be V or H");
    }
  }
  if (hv.empty() && hh.empty()) throw std::invalid_argument(path + ": no readings");
  if (!hv.empty() && !hh.empty() && hv != hh)
    throw std::invalid_argument(path + ": vertical and horizontal blocks must share heights");
  SoundingData data;
  data.vertical = !hv.empty();
  data.horizontal = !hh.empty();
  data.heights = data.vertical ? hv : hh;
  data.b.resize(bv.size() + bh.size());
  for (std::size_t i = 0; i < bv.size(); ++i) data.b[i] = bv[i];
  for (std::size_t i = 0; i < bh.size(); ++i) data.b[bv.size() + i] = bh[i];
  data.validate();
  return data;
}

void write_data_csv(const std::string& path, const SoundingData& data) {
  data.validate();
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out.precision(17);
  out << "height_m,orientation,apparent_conductivity_S_per_m\n";
  const int m = static_cast<int>(data.heights.size());
  int offset = 0;
  if (data.vertical) {
    for (int i = 0; i < m; ++i) out << data.heights[i] << ",V," << data.b[i] << "\n";
    offset = m;
  }
  if (data.horizontal)
    for (int i = 0; i < m; ++i) out << data.heights[i] << ",H," << data.b[offset + i] << "\n";
}

}  // namespace emsound
