#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace emsound {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kMu0 = 4e-7 * kPi;  // vacuum permeability, H/m

using Complex = std::complex<double>;

/// Layered half-space model. Layer n is a half-space of infinite extent, so
/// thicknesses d have length n-1. Conductivities are S/m throughout.
struct LayeredEarthModel {
  Eigen::VectorXd sigma;  // length n, sigma_k >= 0
  Eigen::VectorXd d;      // length n-1, d_k > 0
  Eigen::VectorXd mu;     // length n, mu_k > 0 (default mu0)

  int layers() const { return static_cast<int>(sigma.size()); }
  void validate() const;
};

/// Model with uniform permeability mu0.
LayeredEarthModel make_model(Eigen::VectorXd sigma, Eigen::VectorXd d);

struct InstrumentSetup {
  double r = 1.0;      // inter-coil distance, m
  double f = 14600.0;  // operating frequency, Hz
  std::vector<double> heights;  // non-negative, strictly increasing, m
  bool vertical = true;
  bool horizontal = true;
  // Documentation-only diagnostic; the numerics never read it.
  std::optional<double> reference_induction_number;

  // omega is always derived, never stored.
  double omega() const { return 2.0 * kPi * f; }
  int blocks() const { return (vertical ? 1 : 0) + (horizontal ? 1 : 0); }
  int data_size() const { return blocks() * static_cast<int>(heights.size()); }
  void validate() const;
};

/// Stacked measurement vector: vertical block (one entry per height) followed
/// by the horizontal block, or a single block when one orientation is used.
struct SoundingData {
  Eigen::VectorXd b;  // S/m
  std::vector<double> heights;
  bool vertical = true;
  bool horizontal = true;
  std::optional<double> noise_estimate;  // ||e|| bound, S/m

  int blocks() const { return (vertical ? 1 : 0) + (horizontal ? 1 : 0); }
  void validate() const;
};

InstrumentSetup setup_for(const SoundingData& data, double r = 1.0, double f = 14600.0);

double skin_depth(double sigma_ref, const InstrumentSetup& setup);
double induction_number(double sigma_ref, const InstrumentSetup& setup);

// Model file: JSON {"sigma": [...], "d": [...], "mu": [...] (optional)}.
// Data file: CSV with columns height_m, orientation (V|H),
// apparent_conductivity_S_per_m, one row per reading.
LayeredEarthModel read_model_json(const std::string& path);
void write_model_json(const std::string& path, const LayeredEarthModel& model);
SoundingData read_data_csv(const std::string& path);
void write_data_csv(const std::string& path, const SoundingData& data);

}  // namespace emsound
