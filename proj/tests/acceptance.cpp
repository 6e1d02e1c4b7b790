// Acceptance gate: every numbered check prints one pass/fail line with the
// measured values; the process exits nonzero when any check fails.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "croftonlab/banach.hpp"
#include "croftonlab/cosine.hpp"
#include "croftonlab/estimate.hpp"
#include "croftonlab/product_crofton.hpp"
#include "croftonlab/scenario.hpp"
#include "croftonlab/sphere_grid.hpp"

using namespace croftonlab;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * kPi;

int failures = 0;

void record(int criterion, const std::string& what, bool ok, const std::string& detail) {
  std::printf("criterion %d %-34s %s  (%s)\n", criterion, what.c_str(),
              ok ? "pass" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

void criterion_1() {
  Scenario sc = builtin_scenario("circle-euclidean");
  EstimateReport mc = estimate_average(sc, 100000, sc.seed);
  record(1, "circle Monte-Carlo vs 2pi", std::abs(mc.estimate - kTau) <= 0.02 * kTau,
         fmt("estimate %.5f, target %.5f, tol 2%%", mc.estimate, kTau));
  double rhs = mixed_volume_side(sc, 1000);
  record(1, "circle mixed-volume vs 2pi", std::abs(rhs - kTau) <= 0.005 * kTau,
         fmt("value %.6f, target %.6f, tol 0.5%%", rhs, kTau));
}

void criterion_2() {
  const char* names[] = {"circle-euclidean", "circle-k2", "circle-k3"};
  for (int k = 1; k <= 3; ++k) {
    Scenario sc = builtin_scenario(names[k - 1]);
    double target = kTau * k;
    EstimateReport mc = estimate_average(sc, 100000, sc.seed);
    double rhs = mixed_volume_side(sc, 1000);
    bool ok = std::abs(mc.estimate - target) <= 0.02 * target &&
              std::abs(rhs - target) <= 0.02 * target;
    record(2, "frequency k=" + std::to_string(k) + " both sides",
           ok, fmt("lhs %.5f, rhs %.5f, tol 2%%", mc.estimate, rhs));
  }
}

void criterion_3() {
  Scenario sc = builtin_scenario("torus-decoupled");
  double target = kTau * kTau;
  EstimateReport mc = estimate_average(sc, 1000000, sc.seed);
  double rhs = mixed_volume_side(sc);
  bool ok = std::abs(mc.estimate - target) <= 0.03 * target &&
            std::abs(rhs - target) <= 0.03 * target;
  record(3, "torus decoupled vs 4pi^2", ok,
         fmt("lhs %.4f, rhs %.4f, tol 3%%", mc.estimate, rhs));
}

void criterion_4() {
  SymmetrizedNorm s2 = symmetrize(Norm::euclidean(2), 2048);
  double err2 = 0.0;
  for (int i = 0; i < 512; ++i) {
    double a = kTau * i / 512;
    Vec y(2);
    y << std::cos(a), std::sin(a);
    err2 = std::max(err2, std::abs(s2.h(y) - 1.0));
  }
  record(4, "Euclidean symmetrization dim 2", err2 <= 1e-3,
         fmt("sup error %.2e, tol %.0e", err2, 1e-3));

  SymmetrizedNorm s3 = symmetrize(Norm::euclidean(3), 5);
  SphereQuadrature test = icosphere_grid(2);
  double err3 = 0.0;
  for (int i = 0; i < test.size(); ++i)
    err3 = std::max(err3, std::abs(s3.h(test.points.col(i)) - 1.0));
  record(4, "Euclidean symmetrization dim 3", err3 <= 1e-3,
         fmt("sup error %.2e, tol %.0e", err3, 1e-3));
}

void criterion_5() {
  Norm linf = parse_norm_spec("linf:2");
  SymmetrizedNorm sym = symmetrize(linf, 8192);
  Vec e1(2), diag(2);
  e1 << 1.0, 0.0;
  diag << 1.0, 1.0;
  double h1 = sym.h(e1), h2 = sym.h(diag);
  record(5, "cube symmetrization h(e1)=1.5", std::abs(h1 - 1.5) <= 1e-3,
         fmt("h(e1) = %.6f, target %.1f", h1, 1.5));
  record(5, "cube symmetrization h(1,1)=2", std::abs(h2 - 2.0) <= 1e-3,
         fmt("h(1,1) = %.6f, target %.1f", h2, 2.0));
}

void criterion_6() {
  GrassmannDensity phi2 = crofton_density_for(Norm::euclidean(2));
  double err2 = 0.0;
  for (int i = 0; i < 512; ++i) {
    double a = kTau * i / 512;
    Vec y(2);
    y << std::cos(a), std::sin(a);
    err2 = std::max(err2, std::abs(phi2(y) - 0.5));
  }
  record(6, "Crofton constant dim 2 = 1/2", err2 <= 1e-3,
         fmt("sup error %.2e, tol %.0e", err2, 1e-3));

  GrassmannDensity phi3 = crofton_density_for(Norm::euclidean(3));
  SphereQuadrature test = icosphere_grid(3);
  double err3 = 0.0;
  for (int i = 0; i < test.size(); ++i)
    err3 = std::max(err3, std::abs(phi3(test.points.col(i)) - 1.0 / kPi));
  record(6, "Crofton constant dim 3 = 1/pi", err3 <= 1e-3,
         fmt("sup error %.2e, tol %.0e", err3, 1e-3));
}

void criterion_7() {
  ZonoidReport bad = zonoid_check(Norm::lp(1.5, 3));
  record(7, "lp p=1.5 dim 3 not a zonoid", !bad.is_zonoid && bad.min_density < 0.0,
         fmt("min density %.4f, mean %.4f", bad.min_density, bad.mean_density));
  ZonoidReport good = zonoid_check(Norm::lp(4.0, 3));
  record(7, "lp p=4 dim 3 is a zonoid",
         good.is_zonoid && good.min_density >= -1e-4 * good.mean_density,
         fmt("min density %.4f, mean %.4f", good.min_density, good.mean_density));
}

void criterion_8() {
  std::vector<Norm> pre = {Norm::euclidean(2), Norm::euclidean(2)};
  Vec e1 = Vec::Zero(4), e2 = Vec::Zero(4);
  e1[0] = 1.0;
  e2[2] = 1.0;
  ProductCroftonResult res = product_crofton_density(pre, {e1, e2}, 200000, 7);
  bool ok = std::abs(res.estimate - res.predicted) <= 0.02 * res.predicted;
  record(8, "product Crofton unit square", ok,
         fmt("estimate %.5f, predicted %.5f, tol 2%%", res.estimate, res.predicted));
}

void criterion_9() {
  // Smoothed-cube circle scenario: both pipelines agree with no closed form.
  Scenario linf = builtin_scenario("circle-linf");
  VerificationRecord rec = verify(linf);
  record(9, "smoothed-cube circle 3-sigma", rec.pass,
         fmt("lhs %.5f, rhs %.5f", rec.lhs, rec.rhs));

  // Metric independence of the mixed-volume side on every built-in scenario.
  bool metric_ok = true;
  double worst = 0.0;
  for (const std::string& name : builtin_scenario_names()) {
    Scenario sc = builtin_scenario(name);
    if (sc.chart.n == 1) sc.grid = 200;
    else sc.grid = 8;
    double flat = mixed_volume_side(sc);
    Scenario warped = sc;
    warped.chart.metric = [](const Vec& x) {
      Mat g = Mat::Identity(x.size(), x.size());
      g(0, 0) = std::pow(1.0 + 0.4 * std::sin(x[0]), 2);
      if (x.size() == 2) g(1, 1) = 1.0 + 0.3 * std::cos(x[0] + x[1]) * std::cos(x[0] + x[1]);
      return g;
    };
    double curved = mixed_volume_side(warped);
    double rel = std::abs(curved - flat) / std::max(1e-300, std::abs(flat));
    worst = std::max(worst, rel);
    metric_ok = metric_ok && rel <= 1e-8;
  }
  record(9, "metric independence (all)", metric_ok,
         fmt("worst relative deviation %.2e, tol %.0e", worst, 1e-8));

  // Domain additivity of the Monte-Carlo side on every built-in scenario.
  bool add_ok = true;
  double worst_z = 0.0;
  for (const std::string& name : builtin_scenario_names()) {
    Scenario sc = builtin_scenario(name);
    long n = sc.chart.n == 1 ? 40000 : 60000;
    Scenario left = sc, right = sc;
    double mid = 0.5 * (sc.U.lo[0] + sc.U.hi[0]);
    left.U.hi[0] = mid;
    right.U.lo[0] = mid;
    EstimateReport full = estimate_average(sc, n, sc.seed + 100);
    EstimateReport l = estimate_average(left, n, sc.seed + 200);
    EstimateReport r = estimate_average(right, n, sc.seed + 300);
    double gap = std::abs(l.estimate + r.estimate - full.estimate);
    double sigma = std::sqrt(full.std_error * full.std_error + l.std_error * l.std_error +
                             r.std_error * r.std_error);
    worst_z = std::max(worst_z, gap / sigma);
    add_ok = add_ok && gap <= 3.0 * sigma;
  }
  record(9, "domain additivity (all)", add_ok,
         fmt("worst z %.2f, tol %.1f", worst_z, 3.0));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
