#include "dehn/shapes.hpp"

#include <cmath>

namespace dehn {

namespace {

const cplx I{0.0, 1.0};

cplx ratio(cplx num, cplx den, const char* simplex, double eps) {
  if (std::abs(den) < eps)
    throw DegenerateShape(std::string("denominator of ") + simplex +
                          " vanishes");
  return num / den;
}

}  // namespace

double distance_to_punctures(cplx x) {
  double d = std::abs(x - kPunctures[0]);
  for (int k = 1; k < 4; ++k) d = std::min(d, std::abs(x - kPunctures[k]));
  return d;
}

SimplexShape shape_triple(cplx z, double eps) {
  if (std::abs(z) < eps) throw DegenerateShape("shape parameter at 0");
  if (std::abs(z - 1.0) < eps) throw DegenerateShape("shape parameter at 1");
  return {z, (z - 1.0) / z, 1.0 / (1.0 - z)};
}

ShapeVector shapes_from_params(const ParamPoint& p, double eps) {
  if (distance_to_punctures(p.alpha) < eps)
    throw DegenerateShape("alpha at a puncture");
  if (distance_to_punctures(p.beta) < eps)
    throw DegenerateShape("beta at a puncture");

  const cplx a = p.alpha;
  const cplx b = p.beta;

  // alpha family
  const cplx w4 = ratio(a * I + a + 1.0 - I, a * I - a + 1.0 - I, "w4", eps);
  const cplx z1 = ratio(a + a * I, 2.0 - a + a * I, "z1", eps);
  const cplx w2 = ratio(a * I + a - 1.0 - I, a * I - a + 1.0 + I, "w2", eps);
  const cplx z3 = ratio(a * I + a - 2.0 * I, a * I - a, "z3", eps);
  // beta family
  const cplx w1 = ratio(2.0 * I - b - b * I, b - b * I, "w1", eps);
  const cplx z2 = ratio(I - 1.0 - b - b * I, b - b * I + I - 1.0, "z2", eps);
  const cplx w3 = ratio(-b - b * I, b - b * I - 2.0, "w3", eps);
  const cplx z4 = ratio(1.0 + I - b - b * I, b - b * I - I - 1.0, "z4", eps);

  const std::array<cplx, 8> vals{z1, z2, z3, z4, w1, w2, w3, w4};
  ShapeVector out;
  out.source = p;
  for (int k = 0; k < 8; ++k) {
    try {
      out.shapes[k] = shape_triple(vals[k], eps);
    } catch (const DegenerateShape&) {
      throw DegenerateShape(std::string("simplex ") + kSimplexNames[k] +
                            " degenerate");
    }
  }
  return out;
}

std::array<RelationResidual, 8> consistency_residuals(const ShapeVector& s) {
  const cplx z1 = s.z1().z, z2 = s.z2().z, z3 = s.z3().z, z4 = s.z4().z;
  const cplx w1 = s.w1().z, w2 = s.w2().z, w3 = s.w3().z, w4 = s.w4().z;

  return {{
      {"w1*w2*w3*w4 - 1", w1 * w2 * w3 * w4 - 1.0},
      {"z1*z2*z3*z4 - 1", z1 * z2 * z3 * z4 - 1.0},
      {"w1''w2'w3''w4'z1'z2''z3'z4'' - 1",
       s.w1().zpp * s.w2().zp * s.w3().zpp * s.w4().zp * s.z1().zp *
               s.z2().zpp * s.z3().zp * s.z4().zpp -
           1.0},
      {"w1*w3*z1*z3 - 1", w1 * w3 * z1 * z3 - 1.0},
      {"w1*w3 + 1", w1 * w3 + 1.0},
      {"z2*z4 + 1", z2 * z4 + 1.0},
      {"w1''w3''z2''z4'' + 1/4",
       s.w1().zpp * s.w3().zpp * s.z2().zpp * s.z4().zpp + 0.25},
      {"w2'w4'z1'z3' + 4",
       s.w2().zp * s.w4().zp * s.z1().zp * s.z3().zp + 4.0},
  }};
}

std::string OrientationReport::flags() const {
  std::string out(8, '0');
  for (int k = 0; k < 8; ++k) {
    if (simplex[k] == Orientation::positive) out[k] = '+';
    else if (simplex[k] == Orientation::negative) out[k] = '-';
  }
  return out;
}

OrientationReport classify_orientation(const ShapeVector& s, double eps) {
  OrientationReport rep;
  rep.epsilon = eps;
  for (int k = 0; k < 8; ++k) {
    const double im = s.shapes[k].z.imag();
    rep.simplex[k] = im > eps    ? Orientation::positive
                     : im < -eps ? Orientation::negative
                                 : Orientation::flat;
  }
  return rep;
}

}  // namespace dehn
