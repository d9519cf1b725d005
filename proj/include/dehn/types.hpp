#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace dehn {

using cplx = std::complex<double>;

// Guard radius for shape degeneracies: simplex parameters within this distance
// of {0, 1}, vanishing formula denominators, and parameter values within this
// distance of a puncture are rejected.
inline constexpr double kDegenerateEps = 1e-13;

// Default half-width of the band |Im z| <= eps used to classify a simplex as
// flat.  Deliberately much looser than kDegenerateEps.
inline constexpr double kFlatEps = 1e-9;

// Parameter value of the complete structure (both sides).
inline const cplx kCompleteParam{0.5, 0.5};

// The four punctures of the parameter plane.  Every degeneracy of the eight
// shape formulas happens at one of these.
inline const std::array<cplx, 4> kPunctures{cplx{0.0, 0.0}, cplx{1.0, 0.0},
                                            cplx{0.0, 1.0}, cplx{1.0, 1.0}};

double distance_to_punctures(cplx x);

// A simplex parameter hit {0, 1} or a formula denominator vanished.
class DegenerateShape : public std::runtime_error {
 public:
  explicit DegenerateShape(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive continuation could not keep the branch unambiguous; the path runs
// too close to a puncture.
class StepCollapse : public std::runtime_error {
 public:
  explicit StepCollapse(const std::string& what) : std::runtime_error(what) {}
};

class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateJacobian : public std::runtime_error {
 public:
  explicit DegenerateJacobian(const std::string& what) : std::runtime_error(what) {}
};

// The 2x2 real system p*u + q*v = 2*pi*i is singular (u, v real-collinear).
class SingularSystem : public std::runtime_error {
 public:
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimitive : public std::runtime_error {
 public:
  explicit NotPrimitive(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateTriangle : public std::runtime_error {
 public:
  explicit DegenerateTriangle(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dehn
