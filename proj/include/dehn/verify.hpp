#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dehn/continuation.hpp"
#include "dehn/types.hpp"

namespace dehn {

// The similar-triangle construction over the unit square ABCD = 0, 1, 1+i, i
// with free interior point O.  Each constructed point is the right-angle
// apex over its base segment, all four taken on the branch
//   apex = (P + O)/2 - i*(O - P)/2,
// which makes T - R = 1 and S - U = -i identically in O.
struct OctagonConfig {
  cplx A, B, C, D;  // square corners 0, 1, 1+i, i
  cplx O;
  cplx R, S, T, U;  // apexes over DO, AO, BO, CO respectively
  // true where the "+" apex branch was used; all false on the canonical
  // branch family.
  std::array<bool, 4> orientation_flags{};
};

// Throws DegenerateTriangle if omega is outside the open square or within
// eps of a corner.
OctagonConfig octagon_construct(cplx omega, double eps = kDegenerateEps);

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::vector<std::string> offenders;
};

struct VerificationReport {
  std::string id;
  int samples = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
  double max_residual() const;
};

std::string report_text(const VerificationReport& r);

// Translation identities T = R + 1, S = U - i and simplicity of the octagon
// A S B T C U D R.
VerificationReport octagon_tiling_check(const OctagonConfig& cfg);

// Matches the similarity classes of the triangles ARO, BSO, CTO, DUO against
// the beta-side shape formulas at beta = omega under the frozen vertex
// assignment (apex, corner, O), and checks the opposite-triangle product
// relations directly from the triangle data.
VerificationReport horoball_correspondence(cplx omega);

// Searches all pairings and vertex orderings for the assignment matching the
// beta-side shapes at the given omega; returns strings like "ARO:z2".  Used
// once to discover the frozen constants above.
std::vector<std::string> horoball_assignment_search(cplx omega, double tol = 1e-10);

// Circle-to-square correspondence: n samples on |beta - (1+i)/2| = 1/sqrt(2)
// (plus corner-adjacent probes) must give four flat simplices and (p, q) on
// the square max(|p|,|q|) = 2, with q = 2 on the arc from i to 1+i through
// the top and the four corners mapping to (+-2, +-2).
VerificationReport verify_circle_to_square(int n_samples);

// Large-|beta| limit: over a radius sweep the computed (p, q) must approach
// the square max(|p|,|q|) = 1 monotonically, with the four beta-shapes
// tending to -i.  Angles within 0.02 of the cut directions are skipped.
VerificationReport verify_infinite_circle(const std::vector<double>& radii);

// Strong isolation: word-level constancy of l_W, m_W in alpha, decoupling of
// joint solves, invariance of the complete cusp modulus, and the sanity check
// that the volume does move.
VerificationReport verify_isolation(int grid);

// Shape-relation property suite over random valid parameter points.
VerificationReport verify_consistency(int n_samples, std::uint64_t seed);

// Octagon property suite over random interior omega.
VerificationReport verify_octagon(int n_samples, std::uint64_t seed);

}  // namespace dehn
