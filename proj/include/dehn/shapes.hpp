#pragma once

#include <array>
#include <string>

#include "dehn/types.hpp"

namespace dehn {

// An ideal tetrahedron shape together with its two companion parameters,
//   z' = (z-1)/z,  z'' = 1/(1-z),  so that z * z' * z'' = -1.
// Companions are fixed at construction and never recomputed downstream.
struct SimplexShape {
  cplx z;
  cplx zp;   // z'
  cplx zpp;  // z''
};

// Builds the (z, z', z'') triple.  Throws DegenerateShape if z is within eps
// of 0 or 1.
SimplexShape shape_triple(cplx z, double eps = kDegenerateEps);

// A point of the two-variable parameter space.  alpha drives the simplices
// z1, z3, w2, w4; beta drives z2, z4, w1, w3.  Valid points keep both
// coordinates away from the punctures {0, 1, i, 1+i}.
struct ParamPoint {
  cplx alpha;
  cplx beta;
};

enum class Simplex : int { z1 = 0, z2, z3, z4, w1, w2, w3, w4 };

inline constexpr std::array<const char*, 8> kSimplexNames{
    "z1", "z2", "z3", "z4", "w1", "w2", "w3", "w4"};

// The eight simplex shapes of the triangulation at one parameter point,
// stored in the order z1, z2, z3, z4, w1, w2, w3, w4.
struct ShapeVector {
  std::array<SimplexShape, 8> shapes;
  ParamPoint source;

  const SimplexShape& operator[](Simplex s) const {
    return shapes[static_cast<int>(s)];
  }
  const SimplexShape& z1() const { return shapes[0]; }
  const SimplexShape& z2() const { return shapes[1]; }
  const SimplexShape& z3() const { return shapes[2]; }
  const SimplexShape& z4() const { return shapes[3]; }
  const SimplexShape& w1() const { return shapes[4]; }
  const SimplexShape& w2() const { return shapes[5]; }
  const SimplexShape& w3() const { return shapes[6]; }
  const SimplexShape& w4() const { return shapes[7]; }
};

// Evaluates the eight rational shape formulas.  The alpha-side shapes read
// only p.alpha and the beta-side shapes read only p.beta, so each half is
// bitwise stable under changes of the other parameter.  Throws
// DegenerateShape (naming the offending simplex) at the punctures.
ShapeVector shapes_from_params(const ParamPoint& p, double eps = kDegenerateEps);

struct RelationResidual {
  std::string name;
  cplx value;  // lhs - rhs; zero in exact arithmetic
};

// Residuals of the eight edge/product relations satisfied by every shape
// vector produced by shapes_from_params:
//   w1 w2 w3 w4 = 1                   z1 z2 z3 z4 = 1
//   w1''w2'w3''w4'z1'z2''z3'z4'' = 1  w1 w3 z1 z3 = 1
//   w1 w3 = -1                        z2 z4 = -1
//   w1''w3''z2''z4'' = -1/4           w2'w4'z1'z3' = -4
// (w2 w4 = -1 and z1 z3 = -1 follow from these.)
std::array<RelationResidual, 8> consistency_residuals(const ShapeVector& s);

enum class Orientation { positive, flat, negative };

struct OrientationReport {
  std::array<Orientation, 8> simplex;  // z1..z4, w1..w4 order
  double epsilon;

  // "+" / "0" / "-" per simplex, in z1..z4, w1..w4 order.
  std::string flags() const;
};

OrientationReport classify_orientation(const ShapeVector& s, double eps = kFlatEps);

}  // namespace dehn
