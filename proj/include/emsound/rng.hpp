#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace emsound {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Per-job seed for (master seed, cell index, realization index) triples.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell,
                                 std::uint64_t realization) {
  std::uint64_t s = splitmix64(master ^ 0x6A09E667F3BCC909ull);
  s = splitmix64(s ^ splitmix64(cell + 0x9E3779B97F4A7C15ull));
  s = splitmix64(s ^ splitmix64(realization + 0xBB67AE8584CAA73Bull));
  return s;
}

/// Deterministic uniform/normal source. Box-Muller (cosine branch, one draw
/// per call) over mt19937_64; std::normal_distribution is avoided because it
/// is not bit-stable across standard library implementations.
class NormalRng {
 public:
  explicit NormalRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace emsound
