#pragma once

#include <vector>

#include "dehn/shapes.hpp"
#include "dehn/types.hpp"

namespace dehn {

// Cusp labels.  The pair {W, Z} is driven by beta, the pair {Y, X} by alpha.
enum class Cusp { W, X, Y, Z };

// Which parameter a cusp (or a filling equation) lives on.
enum class Side { alpha, beta };

constexpr Side side_of(Cusp c) {
  return (c == Cusp::W || c == Cusp::Z) ? Side::beta : Side::alpha;
}

constexpr const char* side_name(Side s) {
  return s == Side::alpha ? "alpha" : "beta";
}

// Derivatives of the longitude/meridian holonomy at one cusp.
struct CuspHolonomy {
  cplx l;
  cplx m;
};

struct HolonomyValues {
  CuspHolonomy w, x, y, z;

  const CuspHolonomy& at(Cusp c) const {
    switch (c) {
      case Cusp::W: return w;
      case Cusp::X: return x;
      case Cusp::Y: return y;
      default: return z;
    }
  }
};

// Evaluates the eight holonomy words as products of companion parameters,
// one word per (cusp, curve).  Throws DegenerateShape if a factor would be
// inverted through zero.
HolonomyValues holonomy_words(const ShapeVector& s, double eps = kDegenerateEps);

// The closed rational forms: l_W, m_W from beta, l_Y, m_Y from alpha,
// duplicated to Z and X.  Throws DegenerateShape at punctures.
HolonomyValues holonomy_closed_form(const ParamPoint& p, double eps = kDegenerateEps);

// Single-side closed forms and their logarithmic derivatives (partial
// fractions over the four punctures).  Side::beta gives the W/Z cusp pair,
// Side::alpha gives Y/X.
cplx longitude_value(Side side, cplx x);
cplx meridian_value(Side side, cplx x);
cplx longitude_dlog(Side side, cplx x);
cplx meridian_dlog(Side side, cplx x);

// Branch-tracked logarithms of the meridian/longitude holonomy of one cusp
// pair: exp(u) = m and exp(v) = l, with u = Log m + 2*pi*i*branch_u for the
// principal determination Log.  Branch integers are written only by the
// continuation machinery.
struct LogHolonomy {
  cplx u;
  cplx v;
  int branch_u = 0;
  int branch_v = 0;
};

// Residuals of the word-level cancellation identities:
//   w4''/z1' - 1/2  (the alpha factors of l_W collapse to a constant)
// and the four cusp-pair equalities l_W-l_Z, m_W-m_Z, l_Y-l_X, m_Y-m_X,
// all evaluated through the words.
std::vector<RelationResidual> cancellation_identities(const ParamPoint& p);

struct CuspModulus {
  cplx tau;
  bool flipped;  // true if tau was negated to land in the upper half plane
};

// Modulus of the given cusp at the complete structure, computed as the ratio
// (d log l / dx) / (d log m / dx) at x = (1+i)/2 of the cusp's own parameter.
CuspModulus cusp_modulus_complete(Cusp c);

}  // namespace dehn
