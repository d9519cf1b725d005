#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dehn/holonomy.hpp"

namespace dehn::cli {

// Exit codes: 0 success/pass, 1 verification failure, 2 solver
// non-convergence, 3 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct ScanOptions {
  Side side = Side::beta;
  double p_min = 0, p_max = 0, p_step = 1;
  double q_min = 0, q_max = 0, q_step = 1;
  int threads = 1;
};

// One CSV row per grid point in row-major (p outer, q inner) order,
// independent of thread count.  Numeric cells use 17 significant digits.
std::string scan_csv(const ScanOptions& opts);

// The construction figure: unit square, O, the four triangles, the octagon
// and a tiles x tiles block of lattice translates.  1000 SVG units per unit
// length, deterministic element order.
std::string octagon_svg(cplx omega, int tiles);

}  // namespace dehn::cli
