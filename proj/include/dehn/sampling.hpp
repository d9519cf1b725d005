#pragma once

#include <cstdint>
#include <random>

#include "dehn/shapes.hpp"
#include "dehn/types.hpp"

namespace dehn {

// 53-bit uniform in [0, 1); bit-stable across platforms, unlike
// std::uniform_real_distribution.
inline double rand_unit(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline cplx rand_box(std::mt19937_64& g, double re0, double re1, double im0,
                     double im1) {
  return {re0 + (re1 - re0) * rand_unit(g), im0 + (im1 - im0) * rand_unit(g)};
}

// A parameter value in [-1.5, 2.5]^2 at distance >= clearance from every
// puncture.
cplx random_param(std::mt19937_64& g, double clearance = 0.05);

inline ParamPoint random_param_point(std::mt19937_64& g, double clearance = 0.05) {
  return {random_param(g, clearance), random_param(g, clearance)};
}

// A point of the open unit square with distance >= clearance from the corners.
cplx random_square_interior(std::mt19937_64& g, double clearance = 1e-3);

}  // namespace dehn
