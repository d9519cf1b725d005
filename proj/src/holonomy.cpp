#include "dehn/holonomy.hpp"

#include <cmath>

namespace dehn {

namespace {

const cplx I{0.0, 1.0};
const cplx ONE_I{1.0, 1.0};  // 1+i

cplx inv(cplx x, double eps) {
  if (std::abs(x) < eps)
    throw DegenerateShape("holonomy word factor inverted through zero");
  return 1.0 / x;
}

}  // namespace

HolonomyValues holonomy_words(const ShapeVector& s, double eps) {
  const SimplexShape &z1 = s.z1(), &z2 = s.z2(), &z3 = s.z3(), &z4 = s.z4();
  const SimplexShape &w1 = s.w1(), &w2 = s.w2(), &w3 = s.w3(), &w4 = s.w4();

  HolonomyValues h;
  h.w.l = w4.zpp * inv(z2.zpp, eps) * inv(z1.zp, eps) * w1.zp;
  h.w.m = z2.zp * inv(w4.zp, eps) * inv(w3.zpp, eps) * z3.zpp;
  h.z.l = w2.zpp * inv(z2.zpp, eps) * inv(z3.zp, eps) * w1.zp;
  h.z.m = z2.zp * inv(w2.zp, eps) * inv(w3.zpp, eps) * z1.zpp;
  h.y.l = z3.zpp * inv(z2.zpp, eps) * inv(w2.zp, eps) * w3.zp;
  h.y.m = z2.zp * inv(z3.zp, eps) * inv(w1.zpp, eps) * w4.zpp;
  h.x.l = z3.zpp * inv(z4.zpp, eps) * inv(w2.zp, eps) * w1.zp;
  h.x.m = z4.zp * inv(z3.zp, eps) * inv(w3.zpp, eps) * w4.zpp;
  return h;
}

cplx longitude_value(Side side, cplx x) {
  if (side == Side::beta)
    return x * (x - I) / ((x - 1.0) * (x - ONE_I));
  return x * (x - 1.0) / ((x - I) * (x - ONE_I));
}

cplx meridian_value(Side side, cplx x) {
  if (side == Side::beta)
    return x * (x - 1.0) / ((x - I) * (x - ONE_I));
  return (x - 1.0) * (x - ONE_I) / (x * (x - I));
}

cplx longitude_dlog(Side side, cplx x) {
  if (side == Side::beta)
    return 1.0 / x + 1.0 / (x - I) - 1.0 / (x - 1.0) - 1.0 / (x - ONE_I);
  return 1.0 / x + 1.0 / (x - 1.0) - 1.0 / (x - I) - 1.0 / (x - ONE_I);
}

cplx meridian_dlog(Side side, cplx x) {
  if (side == Side::beta)
    return 1.0 / x + 1.0 / (x - 1.0) - 1.0 / (x - I) - 1.0 / (x - ONE_I);
  return 1.0 / (x - 1.0) + 1.0 / (x - ONE_I) - 1.0 / x - 1.0 / (x - I);
}

HolonomyValues holonomy_closed_form(const ParamPoint& p, double eps) {
  if (distance_to_punctures(p.alpha) < eps)
    throw DegenerateShape("alpha at a puncture");
  if (distance_to_punctures(p.beta) < eps)
    throw DegenerateShape("beta at a puncture");

  HolonomyValues h;
  h.w.l = longitude_value(Side::beta, p.beta);
  h.w.m = meridian_value(Side::beta, p.beta);
  h.z = h.w;
  h.y.l = longitude_value(Side::alpha, p.alpha);
  h.y.m = meridian_value(Side::alpha, p.alpha);
  h.x = h.y;
  return h;
}

std::vector<RelationResidual> cancellation_identities(const ParamPoint& p) {
  const ShapeVector s = shapes_from_params(p);
  const HolonomyValues h = holonomy_words(s);

  std::vector<RelationResidual> out;
  out.push_back({"w4''/z1' - 1/2", s.w4().zpp / s.z1().zp - 0.5});
  out.push_back({"l_W - l_Z", h.w.l - h.z.l});
  out.push_back({"m_W - m_Z", h.w.m - h.z.m});
  out.push_back({"l_Y - l_X", h.y.l - h.x.l});
  out.push_back({"m_Y - m_X", h.y.m - h.x.m});
  return out;
}

CuspModulus cusp_modulus_complete(Cusp c) {
  const Side side = side_of(c);
  const cplx du = meridian_dlog(side, kCompleteParam);
  const cplx dv = longitude_dlog(side, kCompleteParam);
  cplx tau = dv / du;
  const bool flip = tau.imag() < 0.0;
  if (flip) tau = -tau;
  return {tau, flip};
}

}  // namespace dehn
