#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "croftonlab/banach.hpp"
#include "croftonlab/cosine.hpp"
#include "croftonlab/norm.hpp"
#include "croftonlab/rng.hpp"
#include "croftonlab/sphere_grid.hpp"
#include "croftonlab/support_body.hpp"

using namespace croftonlab;

namespace {
constexpr double kPi = std::numbers::pi;

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}
}  // namespace

TEST_CASE("norm gauges and duals") {
  Norm e2 = Norm::euclidean(2);
  CHECK(e2.gauge(v2(3, 4)) == doctest::Approx(5.0));
  CHECK(e2.dual(v2(3, 4)) == doctest::Approx(5.0));

  Norm p3 = Norm::lp(3.0, 3);
  Vec x = v3(0.3, -1.2, 0.7);
  CHECK(p3.gauge(x) ==
        doctest::Approx(std::pow(std::pow(0.3, 3) + std::pow(1.2, 3) + std::pow(0.7, 3),
                                 1.0 / 3.0)));
  // Holder duality: dual of l_p is l_q with 1/p + 1/q = 1.
  double q = 3.0 / 2.0;
  CHECK(p3.dual(x) == doctest::Approx(std::pow(std::pow(0.3, q) + std::pow(1.2, q) +
                                               std::pow(0.7, q),
                                               1.0 / q)));

  // Anisotropic Euclidean: gauge sqrt(x'Ax).
  Mat A(2, 2);
  A << 4.0, 0.0, 0.0, 1.0;
  Norm ea = Norm::euclidean(A);
  CHECK(ea.gauge(v2(1, 0)) == doctest::Approx(2.0));
  CHECK(ea.dual(v2(1, 0)) == doctest::Approx(0.5));
}

TEST_CASE("support-sampled cube gauge") {
  Norm linf = Norm::support_sampled_from_gauge(
      [](const Vec& v) { return v.cwiseAbs().maxCoeff(); }, 2048);
  CHECK(linf.gauge(v2(1, 0.5)) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(linf.gauge(v2(-0.25, 1.5)) == doctest::Approx(1.5).epsilon(1e-3));
  // Dual of the cube gauge is the l1 norm.
  CHECK(linf.dual(v2(1, 1)) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(linf.dual(v2(1, 0)) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("gauge gradient consistency") {
  Norm p4 = Norm::lp(4.0, 3);
  Vec x = v3(0.9, -0.4, 0.2);
  Vec g = p4.gauge_gradient(x);
  // Euler identity for 1-homogeneous functions: <grad, x> = gauge(x).
  CHECK(g.dot(x) == doctest::Approx(p4.gauge(x)).epsilon(1e-8));
  // Finite-difference cross check.
  double h = 1e-6;
  for (int i = 0; i < 3; ++i) {
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    CHECK(g[i] == doctest::Approx((p4.gauge(xp) - p4.gauge(xm)) / (2 * h)).epsilon(1e-4));
  }
}

TEST_CASE("sphere grids are antipodal with the right mass") {
  SphereQuadrature c = circle_grid(256);
  CHECK(c.total_mass() == doctest::Approx(2 * kPi));
  SphereQuadrature ico = icosphere_grid(3);
  CHECK(ico.total_mass() == doctest::Approx(4 * kPi).epsilon(1e-9));
  CHECK(ico.size() == 642);
  // Antipodal closure: -p is in the grid for every p.
  int hits = 0;
  for (int i = 0; i < ico.size(); ++i)
    for (int j = 0; j < ico.size(); ++j)
      if ((ico.points.col(i) + ico.points.col(j)).norm() < 1e-9) ++hits;
  CHECK(hits == ico.size());
  CHECK(sphere_surface_area(2) == doctest::Approx(2 * kPi));
  CHECK(sphere_surface_area(3) == doctest::Approx(4 * kPi));
}

TEST_CASE("sphere density of the Banach volume") {
  Norm e2 = Norm::euclidean(2);
  CHECK(sphere_density(e2, v2(1, 0)) == doctest::Approx(0.5).epsilon(1e-6));
  Norm e3 = Norm::euclidean(3);
  CHECK(sphere_density(e3, v3(0, 0, 1)) == doctest::Approx(1.0 / kPi).epsilon(1e-3));
  // Cube gauge, edge midpoint: tangent ball is a segment of length 2.
  Norm linf = Norm::support_sampled_from_gauge(
      [](const Vec& v) { return v.cwiseAbs().maxCoeff(); }, 2048);
  CHECK(sphere_density(linf, v2(1, 0)) == doctest::Approx(0.5).epsilon(5e-3));
}

TEST_CASE("natural mass") {
  CHECK(natural_mass(Norm::euclidean(2), 2048) == doctest::Approx(kPi).epsilon(1e-6));
  CHECK(natural_mass(Norm::euclidean(3), 4) == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("radial rescale jacobian is 1 on the Euclidean sphere") {
  Norm e3 = Norm::euclidean(3);
  CHECK(radial_rescale_jacobian(e3, v3(0.6, 0.0, 0.8)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("zonoid symmetrization of the Euclidean norm is the identity") {
  SymmetrizedNorm sym = symmetrize(Norm::euclidean(2), 2048);
  for (double a : {0.0, 0.3, 1.1, 2.0})
    CHECK(sym.h(v2(std::cos(a), std::sin(a))) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("segment mass Monte-Carlo agrees with the symmetrized support") {
  Norm e2 = Norm::euclidean(2);
  SymmetrizedNorm sym = symmetrize(e2, 512);
  Vec xi = v2(0.8, 0.6);
  MonteCarloMass mc = natural_measure_segment_mass(e2, xi, 20000, 11);
  CHECK(std::abs(mc.estimate - sym.h(xi)) < 4.0 * mc.std_error + 1e-3);
}

TEST_CASE("cosine transform eigenvalues match the closed forms") {
  // dim 2, degree-2k circular harmonics: 2*(-1)^(k+1) / (4k^2 - 1).
  CHECK(cosine_eigenvalue(2, 0) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(cosine_eigenvalue(2, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  CHECK(cosine_eigenvalue(2, 2) == doctest::Approx(-2.0 / 15.0).epsilon(1e-7));
  // dim 3: pi * integral of |t| P_l(t) dt.
  CHECK(cosine_eigenvalue(3, 0) == doctest::Approx(kPi).epsilon(1e-8));
  CHECK(cosine_eigenvalue(3, 2) == doctest::Approx(kPi / 4.0).epsilon(1e-6));
  CHECK(cosine_eigenvalue(3, 4) == doctest::Approx(-kPi / 24.0).epsilon(1e-5));
}

TEST_CASE("cosine transform of a constant") {
  GrassmannDensity one2 = GrassmannDensity::constant(2, 1.0, 256);
  CHECK(cosine_transform(one2, v2(1, 0)) == doctest::Approx(2.0).epsilon(1e-6));
  GrassmannDensity one3 = GrassmannDensity::constant(3, 1.0, 3);
  CHECK(cosine_transform(one3, v3(0, 0, 1)) == doctest::Approx(kPi).epsilon(1e-6));
}

TEST_CASE("crofton densities of the Euclidean norms are constant") {
  GrassmannDensity phi2 = crofton_density_for(Norm::euclidean(2));
  CHECK(phi2.min_value() == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(phi2(v2(0.6, 0.8)) == doctest::Approx(0.5).epsilon(1e-6));
  GrassmannDensity phi3 = crofton_density_for(Norm::euclidean(3));
  CHECK(phi3.min_value() == doctest::Approx(1.0 / kPi).epsilon(1e-6));
}

TEST_CASE("zonoid discrimination for lp balls in dimension 3") {
  ZonoidReport bad = zonoid_check(Norm::lp(1.5, 3));
  CHECK_FALSE(bad.is_zonoid);
  CHECK(bad.min_density < 0.0);
  ZonoidReport good = zonoid_check(Norm::lp(4.0, 3));
  CHECK(good.is_zonoid);
  CHECK(good.min_density >= -1e-4 * good.mean_density);
}

TEST_CASE("body volumes from support functions") {
  SupportFn disk = [](const Mat& D) { return Vec(D.colwise().norm()); };
  SupportFn square = [](const Mat& D) { return Vec(D.cwiseAbs().colwise().sum()); };
  SupportFn seg = [](const Mat& D) { return Vec(D.row(0).cwiseAbs()); };
  CHECK(body_volume(disk, 2) == doctest::Approx(kPi).epsilon(1e-3));
  CHECK(body_volume(square, 2, 512) == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(body_volume(seg, 2, 512) == doctest::Approx(0.0));
  SupportFn ball = [](const Mat& D) { return Vec(D.colwise().norm()); };
  CHECK(body_volume(ball, 3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(5e-3));
  SupportFn interval = [](const Mat& D) { return Vec(D.cwiseAbs().transpose()); };
  CHECK(body_volume(interval, 1) == doctest::Approx(2.0));
}

TEST_CASE("invalid support functions are rejected") {
  SupportFn bad = [](const Mat& D) { return Vec(-D.colwise().norm()); };
  CHECK_THROWS_AS(body_volume(bad, 2, 256), invalid_body_error);
}

TEST_CASE("mixed volumes by polarization") {
  SupportFn disk = [](const Mat& D) { return Vec(D.colwise().norm()); };
  SupportFn square = [](const Mat& D) { return Vec(D.cwiseAbs().colwise().sum()); };
  SupportFn s1 = [](const Mat& D) { return Vec(D.row(0).cwiseAbs()); };
  SupportFn s2 = [](const Mat& D) { return Vec(D.row(1).cwiseAbs()); };
  // V(A, A) = vol(A).
  CHECK(mixed_volume({disk, disk}, 1024) == doctest::Approx(kPi).epsilon(1e-4));
  // Square [-1,1]^2 and unit disk: (vol(A+B) - vol A - vol B)/2 = 4.
  CHECK(mixed_volume({square, disk}, 1024) == doctest::Approx(4.0).epsilon(1e-4));
  // Orthogonal segments [-e1, e1], [-e2, e2]: half the parallelogram area.
  CHECK(mixed_volume({s1, s2}, 256) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("pairwise sum and block engines are deterministic") {
  std::vector<double> xs(1000);
  for (int i = 0; i < 1000; ++i) xs[i] = std::sin(i * 0.1);
  CHECK(pairwise_sum(xs) == pairwise_sum(xs));
  std::mt19937_64 a = block_engine(42, 7), b = block_engine(42, 7);
  CHECK(a() == b());
  std::mt19937_64 c = block_engine(42, 8);
  CHECK(a() != c());
}
