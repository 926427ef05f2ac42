#pragma once

#include <complex>

#include "emsound/model.hpp"

namespace emsound::detail {

// Both helpers assume Re z >= 0, which holds for z = d_k u_k with the principal
// square root; then |exp(-2z)| <= 1 and neither form can overflow.
inline Complex stable_tanh(const Complex& z) {
  const Complex e = std::exp(-2.0 * z);
  return (1.0 - e) / (1.0 + e);
}

inline Complex stable_sech2(const Complex& z) {
  const Complex e = std::exp(-2.0 * z);
  const Complex d = 1.0 + e;
  return 4.0 * e / (d * d);
}

// Beyond this the layer is opaque: tanh == 1 and sech^2 == 0 to double precision,
// and evaluating exp(-2z) for huge |z| wastes time without changing anything.
constexpr double kOpaque = 300.0;

}  // namespace emsound::detail
