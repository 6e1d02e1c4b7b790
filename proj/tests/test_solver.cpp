#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "croftonlab/estimate.hpp"
#include "croftonlab/finsler.hpp"
#include "croftonlab/product_crofton.hpp"
#include "croftonlab/roots.hpp"
#include "croftonlab/scenario.hpp"

using namespace croftonlab;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * kPi;

Vec v1(double x) {
  Vec v(1);
  v << x;
  return v;
}
Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

FunctionSpaceOnX circle_space() {
  ManifoldChart chart = ManifoldChart::circle();
  return FunctionSpaceOnX(trig_basis(0, {1}, 1), Norm::euclidean(2), chart);
}
}  // namespace

TEST_CASE("theta map and jacobian of the trig space") {
  FunctionSpaceOnX sp = circle_space();
  Vec th = sp.theta(v1(0.7));
  CHECK(th[0] == doctest::Approx(std::cos(0.7)));
  CHECK(th[1] == doctest::Approx(std::sin(0.7)));
  Mat J = sp.theta_jacobian(v1(0.7));
  CHECK(J(0, 0) == doctest::Approx(-std::sin(0.7)));
  CHECK(J(1, 0) == doctest::Approx(std::cos(0.7)));
  // Pullback support for the Euclidean norm: |J xi| = |xi|.
  CHECK(sp.pullback_support(v1(0.7), v1(2.5)) == doctest::Approx(2.5));
}

TEST_CASE("linearly dependent bases are rejected") {
  ManifoldChart chart = ManifoldChart::circle();
  std::vector<BasisFunction> basis = trig_basis(0, {1}, 1);
  basis.push_back(basis[0]);  // duplicate
  CHECK_THROWS_AS(FunctionSpaceOnX(basis, Norm::euclidean(3), chart), std::invalid_argument);
}

TEST_CASE("root counting on the circle") {
  ManifoldChart chart = ManifoldChart::circle();
  Box U{v1(0.0), v1(kTau)};
  SolutionCounter counter({circle_space()}, chart, U);
  // cos t = 0.5 has two roots on [0, 2pi).
  CHECK(counter.count({v2(1, 0)}, v1(0.5)) == 2);
  // offset beyond the range of a unit coefficient vector: no roots.
  CHECK(counter.count({v2(1, 0)}, v1(1.5)) == 0);
  // cos(t - a) = c has two roots for |c| < 1 for any phase.
  CHECK(counter.count({v2(0.6, 0.8)}, v1(-0.3)) == 2);
}

TEST_CASE("root counting on the torus") {
  ManifoldChart chart = ManifoldChart::torus();
  Box U{Vec::Zero(2), Vec::Constant(2, kTau)};
  FunctionSpaceOnX s1(trig_basis(0, {1}, 2), Norm::euclidean(2), chart);
  FunctionSpaceOnX s2(trig_basis(1, {1}, 2), Norm::euclidean(2), chart);
  SolutionCounter counter({s1, s2}, chart, U, CountOptions{4096, 96, 1e-6});
  // cos t1 = 0.3 and sin t2 = -0.2: 2 x 2 = 4 roots.
  bool unc = false;
  CHECK(counter.count({v2(1, 0), v2(0, 1)}, v2(0.3, -0.2), &unc) == 4);
  CHECK_FALSE(unc);
  // Out-of-range second offset: none.
  CHECK(counter.count({v2(1, 0), v2(0, 1)}, v2(0.3, 1.4)) == 0);
  // Coupled phases still give 4 transversal roots.
  CHECK(counter.count({v2(0.6, 0.8), v2(-0.8, 0.6)}, v2(0.5, 0.1)) == 4);
}

TEST_CASE("norm spec parsing") {
  CHECK(parse_norm_spec("euclidean:3").dim() == 3);
  CHECK(parse_norm_spec("lp:2.5:2").lp_exponent() == doctest::Approx(2.5));
  Norm linf = parse_norm_spec("linf:2");
  CHECK(linf.gauge(v2(0.4, 1.0)) == doctest::Approx(1.0).epsilon(1e-3));
  Norm sm = parse_norm_spec("linf-smooth:2");
  // Rounded corner: the smoothed cube lies strictly inside at (1,1).
  CHECK(sm.gauge(v2(1.0, 1.0)) > 1.0 + 1e-2);
  CHECK(sm.gauge(v2(1.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(parse_norm_spec("frobnicate:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_norm_spec("lp:abc:2"), std::invalid_argument);
}

TEST_CASE("built-in scenarios build") {
  for (const std::string& name : builtin_scenario_names()) {
    Scenario sc = builtin_scenario(name);
    CHECK(sc.name == name);
    CHECK(static_cast<int>(sc.factors.size()) == sc.chart.n);
    CHECK(sc.build_spaces().size() == sc.factors.size());
  }
  CHECK_THROWS_AS(builtin_scenario("no-such"), std::invalid_argument);
}

TEST_CASE("config parsing round trip and errors") {
  const char* path = "test_scenario.cfg";
  {
    std::ofstream out(path);
    out << "# comment\n[scenario]\nname = demo\nchart = circle\nmode = theorem-2\n"
        << "samples = 5000\ngrid = 200\nseed = 9\nu_lo = 0\nu_hi = 3.14159\n"
        << "[factor]\nfamily = trig\ncoord = 0\norders = 2\nnorm = euclidean:2\n";
  }
  Scenario sc = load_scenario_config(path);
  CHECK(sc.name == "demo");
  CHECK(sc.samples == 5000);
  CHECK(sc.seed == 9);
  CHECK(sc.factors.size() == 1);
  CHECK(sc.factors[0].orders == std::vector<int>{2});
  CHECK(sc.U.hi[0] == doctest::Approx(3.14159));
  {
    std::ofstream out(path);
    out << "[scenario]\nchart = circle\nbogus_key = 1\n";
  }
  try {
    load_scenario_config(path);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    // line-numbered parse error
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  std::remove(path);
  CHECK_THROWS_AS(load_scenario_config("missing.cfg"), std::invalid_argument);
}

TEST_CASE("finsler integral is metric independent") {
  Scenario sc = builtin_scenario("circle-euclidean");
  double flat = mixed_volume_side(sc, 200);
  Scenario warped = sc;
  warped.chart.metric = [](const Vec& x) {
    Mat g(1, 1);
    g(0, 0) = std::pow(1.0 + 0.4 * std::sin(x[0]), 2);
    return g;
  };
  double curved = mixed_volume_side(warped, 200);
  CHECK(curved == doctest::Approx(flat).epsilon(1e-9));

  Scenario t = builtin_scenario("torus-decoupled");
  t.grid = 8;
  double tflat = mixed_volume_side(t);
  Scenario tw = t;
  tw.chart.metric = [](const Vec& x) {
    Mat g = Mat::Identity(2, 2);
    g(0, 0) = 1.0 + 0.5 * std::cos(x[1]) * std::cos(x[1]);
    g(0, 1) = g(1, 0) = 0.2 * std::sin(x[0]);
    return g;
  };
  double tcurved = mixed_volume_side(tw);
  CHECK(tcurved == doctest::Approx(tflat).epsilon(1e-8));
}

TEST_CASE("average estimate matches 2 pi on the circle") {
  Scenario sc = builtin_scenario("circle-euclidean");
  EstimateReport rep = estimate_average(sc, 20000, 3);
  CHECK(std::abs(rep.estimate - kTau) < 4.0 * rep.std_error);
  CHECK(rep.std_error > 0.0);
  CHECK(rep.uncertain_samples == 0);
  CHECK(rep.t_ranges.size() == 1);
  CHECK(rep.t_ranges[0][1] > 1.0);
}

TEST_CASE("estimates are deterministic and worker-count independent") {
  Scenario sc = builtin_scenario("circle-euclidean");
  EstimateReport a = estimate_average(sc, 10000, 5, 1);
  EstimateReport b = estimate_average(sc, 10000, 5, 1);
  EstimateReport c = estimate_average(sc, 10000, 5, 3);
  CHECK(a.estimate == b.estimate);
  CHECK(a.estimate == c.estimate);
  EstimateReport d = estimate_average(sc, 10000, 6, 1);
  CHECK(a.estimate != d.estimate);
}

TEST_CASE("domain additivity of the average") {
  Scenario sc = builtin_scenario("circle-euclidean");
  Scenario left = sc, right = sc;
  left.U.hi[0] = kPi;
  right.U.lo[0] = kPi;
  EstimateReport full = estimate_average(sc, 30000, 2);
  EstimateReport l = estimate_average(left, 30000, 12);
  EstimateReport r = estimate_average(right, 30000, 22);
  double err = 3.0 * (full.std_error + l.std_error + r.std_error);
  CHECK(std::abs(l.estimate + r.estimate - full.estimate) < err);
}

TEST_CASE("theorem-1 requires zonoid factors") {
  Scenario sc = builtin_scenario("circle-euclidean-t1");
  CHECK(sc.mode == Mode::Theorem1);
  EstimateReport rep = estimate_average(sc, 5000, 3);
  CHECK(std::abs(rep.estimate - kTau) < 5.0 * rep.std_error);
}

TEST_CASE("verification record on a small run") {
  Scenario sc = builtin_scenario("circle-euclidean");
  VerificationRecord rec = verify(sc, 20000, 400, 4);
  CHECK(rec.pass);
  CHECK(rec.rhs == doctest::Approx(kTau).epsilon(1e-6));
  CHECK(rec.mode == "theorem-2");
  CHECK(rec.samples == 20000);
}

TEST_CASE("product crofton mass of a unit square") {
  std::vector<Norm> pre = {Norm::euclidean(2), Norm::euclidean(2)};
  Vec e1 = Vec::Zero(4), e2 = Vec::Zero(4);
  e1[0] = 1.0;
  e2[2] = 1.0;
  ProductCroftonResult res = product_crofton_density(pre, {e1, e2}, 50000, 7);
  CHECK(res.predicted == doctest::Approx(1.0));
  CHECK(std::abs(res.estimate - res.predicted) < 4.0 * res.std_error + 5e-3);
  // Non-zonoid factor rejected.
  std::vector<Norm> bad = {Norm::lp(1.5, 3), Norm::euclidean(2)};
  Vec f1 = Vec::Zero(5), f2 = Vec::Zero(5);
  f1[0] = 1.0;
  f2[3] = 1.0;
  CHECK_THROWS_AS(product_crofton_density(bad, {f1, f2}, 1000, 1), unsupported_mode_error);
}
