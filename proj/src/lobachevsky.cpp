#include "dehn/volume.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace dehn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kZetaTerms = 48;

// zeta(2m) for m = 1..kZetaTerms.  The first two are exact; the rest
// converge fast enough for direct summation.
const std::array<double, kZetaTerms>& zeta_even() {
  static const std::array<double, kZetaTerms> table = [] {
    std::array<double, kZetaTerms> z{};
    z[0] = kPi * kPi / 6.0;
    z[1] = kPi * kPi * kPi * kPi / 90.0;
    for (int m = 2; m < kZetaTerms; ++m) {
      const double s = 2.0 * (m + 1);
      double sum = 1.0;
      for (int k = 2;; ++k) {
        const double term = std::pow(static_cast<double>(k), -s);
        sum += term;
        if (term < 1e-19) break;
      }
      z[m] = sum;
    }
    return z;
  }();
  return table;
}

}  // namespace

double lobachevsky(double theta) {
  // Reduce mod pi into [-pi/2, pi/2]; the function is odd and pi-periodic.
  const double t = std::remainder(theta, kPi);
  if (t == 0.0) return 0.0;
  const double a = std::fabs(t);

  // L(a) = a - a log(2a) + sum_m zeta(2m)/(m(2m+1)) (a/pi)^(2m) a
  const auto& zeta = zeta_even();
  const double x = (a / kPi) * (a / kPi);
  double xm = 1.0;
  double sum = 0.0;
  for (int m = 1; m <= kZetaTerms; ++m) {
    xm *= x;
    const double term = zeta[m - 1] * xm / (m * (2.0 * m + 1.0));
    sum += term;
    if (term < 1e-18) break;
  }
  const double val = a * (1.0 - std::log(2.0 * a) + sum);
  return t < 0.0 ? -val : val;
}

double simplex_volume(const SimplexShape& s) {
  return lobachevsky(std::arg(s.z)) + lobachevsky(std::arg(s.zp)) +
         lobachevsky(std::arg(s.zpp));
}

double volume(const ShapeVector& s) {
  double total = 0.0;
  for (const auto& sh : s.shapes) total += simplex_volume(sh);
  return total;
}

}  // namespace dehn
