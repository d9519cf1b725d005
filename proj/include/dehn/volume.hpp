#pragma once

#include "dehn/shapes.hpp"

namespace dehn {

// Lobachevsky function L(t) = -integral_0^t log|2 sin s| ds, accurate to
// better than 1e-13 absolute.  Odd and pi-periodic by range reduction.
double lobachevsky(double theta);

// Signed volume L(arg z) + L(arg z') + L(arg z'') of one ideal simplex:
// positive for Im z > 0, zero for flat (real) shapes, negative for Im z < 0.
double simplex_volume(const SimplexShape& s);

// Signed volume sum over the eight simplices.
double volume(const ShapeVector& s);

}  // namespace dehn
