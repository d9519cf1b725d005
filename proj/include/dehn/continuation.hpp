#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "dehn/holonomy.hpp"
#include "dehn/types.hpp"

namespace dehn {

// Real Dehn surgery coefficients on one lifted cusp pair; both cusps of the
// pair are filled with the same coefficients.  "complete" is a distinct
// state meaning the equation u = 0.
struct FillingCoeffs {
  double p = 0.0;
  double q = 0.0;
  bool complete = false;

  static FillingCoeffs complete_structure() {
    FillingCoeffs f;
    f.complete = true;
    return f;
  }
  // Throws std::invalid_argument on (0, 0).
  static FillingCoeffs surgery(double p, double q);

  bool integral(double tol = 1e-9) const;
  // gcd(p, q) == 1 as integers; false for non-integral coefficients.
  bool primitive() const;
};

// A polyline in the parameter plane along which logs are continued.  Paths
// start at the complete structure (1+i)/2.  Waypoints must avoid the
// punctures; paths built by default_path() also stay inside the cut plane
// (the plane minus the four rays running from the square's corners away from
// its center) whenever the target itself is off the cuts.
struct PathSpec {
  std::vector<cplx> waypoints;
  double max_step = std::numeric_limits<double>::infinity();
};

// Straight segment base -> target.
PathSpec direct_path(cplx target);

// Straight segment with deterministic circular detours (radius 0.1) around
// any puncture the segment passes within 0.05 of.
PathSpec default_path(cplx target);

// True if no segment of the path crosses one of the four cut rays.  Two
// paths inside the cut plane with the same endpoint continue to identical
// (u, v).
bool path_in_cut_plane(const PathSpec& path);

// Analytic continuation of (u, v) = (log m, log l) from (0, 0) at the base
// point to the end of the path.  Steps are subdivided until the change of
// both logs per step is provably below pi/2 (log-derivative bound times step
// length), so unwrapping is exact.  Throws StepCollapse if subdivision falls
// below 1e-12.
LogHolonomy continue_log(const PathSpec& path, Side side);

struct SolveOptions {
  double tol = 1e-12;      // on |p*u + q*v - 2*pi*i|
  int max_iterations = 200;
};

struct SolveResult {
  cplx param;
  LogHolonomy log_hol;
  double residual;
  int iterations;
  PathSpec path_taken;  // canonical path from the base to param
};

// Newton iteration on g(x) = p*u(x) + q*v(x) - 2*pi*i with the exact
// partial-fraction derivative.  Each iterate is branched by continuation
// from the base point along default_path (or along path_hint for the first
// iterate when given).  Starts from the first-order predictor
// x0 = base + 2*pi*i / (p*u'(base) + q*v'(base)) unless an explicit start is
// supplied; on failure retries from eight points around the base.
SolveResult solve_filling(const FillingCoeffs& f, Side side,
                          std::optional<cplx> start = {},
                          const std::optional<PathSpec>& path_hint = {},
                          const SolveOptions& opts = {});

// Newton on u(x) = 0 from an offset start; converges to the complete
// structure.  Exists so the complete parameter can be *solved for* rather
// than asserted.
SolveResult solve_complete(Side side, const SolveOptions& opts = {});

// Inverts p*u + q*v = 2*pi*i for real (p, q) from the continued logs at x.
// Throws SingularSystem when u and v are real-collinear (in particular at
// the complete structure).
FillingCoeffs filling_from_param(cplx x, Side side);
FillingCoeffs filling_from_param(cplx x, Side side, const PathSpec& path);

struct JointResult {
  SolveResult alpha;
  SolveResult beta;
  // Solution of the coupled two-variable Newton (word-evaluated holonomies,
  // finite-difference Jacobian), and its distance to the decoupled solution.
  cplx coupled_alpha;
  cplx coupled_beta;
  double coupled_residual;
  int coupled_iterations;
  double coupled_gap;
};

// Solves both sides.  The two equations are solved independently, then the
// full coupled 2-complex-variable Newton is run on the word-evaluated
// holonomies and must land on the same point.
JointResult joint_solve(const FillingCoeffs& f_alpha, const FillingCoeffs& f_beta,
                        const SolveOptions& opts = {});

struct CoreGeodesic {
  cplx complex_length;  // Re = translation length (>= 0), Im = torsion
  long r = 0, s = 0;    // the completion used: p*s - q*r = 1
};

// Complex length r*u + s*v of the filled core geodesic, for integer
// primitive (p, q); (r, s) from extended Euclid with r reduced mod p to
// minimal absolute value, sign fixed by Re >= 0.  Throws NotPrimitive for
// non-integer coefficients or gcd != 1 (coefficients lifted from the base
// orbifold carry a factor of 2; divide before calling).
CoreGeodesic core_geodesic(const FillingCoeffs& f, const LogHolonomy& lh);

// Translation length |Re(r*u + s*v)| through the real completion
// (r, s) = (-q, p)/(p^2+q^2).  The real part does not depend on the choice
// of real completion, so this extends core length to real coefficients.
double core_real_length(double p, double q, const LogHolonomy& lh);

}  // namespace dehn
