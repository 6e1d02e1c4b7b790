#include "croftonlab/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace croftonlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::pair<Vec, Vec> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  Vec x(n), w(n);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-based initial guess.
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

double real_sph_harmonic(int l, int m, double theta, double phi) {
  int am = std::abs(m);
  if (am > l) throw std::invalid_argument("real_sph_harmonic: |m| <= l");
  double base = std::sph_legendre(l, am, theta);
  if (m == 0) return base;
  double f = std::sqrt(2.0) * base;
  return m > 0 ? f * std::cos(am * phi) : f * std::sin(am * phi);
}

double real_sph_harmonic(int l, int m, const Vec& x) {
  double theta = std::acos(std::clamp(x[2] / x.norm(), -1.0, 1.0));
  double phi = std::atan2(x[1], x[0]);
  return real_sph_harmonic(l, m, theta, phi);
}

}  // namespace croftonlab
