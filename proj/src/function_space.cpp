#include "croftonlab/function_space.hpp"

#include <cmath>
#include <random>

namespace croftonlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Mat ManifoldChart::metric_at(const Vec& x) const {
  if (!metric) return Mat::Identity(n, n);
  return metric(x);
}

bool ManifoldChart::contains(const Vec& x) const {
  for (int i = 0; i < n; ++i) {
    if (periodic[i]) continue;
    if (x[i] < lo[i] - 1e-12 || x[i] > hi[i] + 1e-12) return false;
  }
  return true;
}

double ManifoldChart::diameter() const { return (hi - lo).norm(); }

Vec ManifoldChart::displacement(const Vec& a, const Vec& b) const {
  Vec d = b - a;
  for (int i = 0; i < n; ++i) {
    if (!periodic[i]) continue;
    double period = hi[i] - lo[i];
    d[i] = std::remainder(d[i], period);
  }
  return d;
}

ManifoldChart ManifoldChart::circle() {
  ManifoldChart c;
  c.n = 1;
  c.lo = Vec::Zero(1);
  c.hi = Vec::Constant(1, 2.0 * kPi);
  c.periodic = {true};
  return c;
}

ManifoldChart ManifoldChart::interval(double a, double b) {
  ManifoldChart c;
  c.n = 1;
  c.lo = Vec::Constant(1, a);
  c.hi = Vec::Constant(1, b);
  c.periodic = {false};
  return c;
}

ManifoldChart ManifoldChart::torus() {
  ManifoldChart c;
  c.n = 2;
  c.lo = Vec::Zero(2);
  c.hi = Vec::Constant(2, 2.0 * kPi);
  c.periodic = {true, true};
  return c;
}

ManifoldChart ManifoldChart::box(const Vec& lo, const Vec& hi) {
  ManifoldChart c;
  c.n = static_cast<int>(lo.size());
  c.lo = lo;
  c.hi = hi;
  c.periodic.assign(c.n, false);
  return c;
}

std::vector<BasisFunction> trig_basis(int coord, const std::vector<int>& frequencies, int n) {
  std::vector<BasisFunction> out;
  for (int k : frequencies) {
    BasisFunction c;
    c.value = [coord, k](const Vec& x) { return std::cos(k * x[coord]); };
    c.gradient = [coord, k, n](const Vec& x) {
      Vec g = Vec::Zero(n);
      g[coord] = -k * std::sin(k * x[coord]);
      return g;
    };
    c.name = "cos" + std::to_string(k);
    out.push_back(c);
    BasisFunction s;
    s.value = [coord, k](const Vec& x) { return std::sin(k * x[coord]); };
    s.gradient = [coord, k, n](const Vec& x) {
      Vec g = Vec::Zero(n);
      g[coord] = k * std::cos(k * x[coord]);
      return g;
    };
    s.name = "sin" + std::to_string(k);
    out.push_back(s);
  }
  return out;
}

std::vector<BasisFunction> monomial_basis(int coord, const std::vector<int>& degrees, int n) {
  std::vector<BasisFunction> out;
  for (int d : degrees) {
    BasisFunction m;
    m.value = [coord, d](const Vec& x) { return std::pow(x[coord], d); };
    m.gradient = [coord, d, n](const Vec& x) {
      Vec g = Vec::Zero(n);
      g[coord] = d == 0 ? 0.0 : d * std::pow(x[coord], d - 1);
      return g;
    };
    m.name = "t^" + std::to_string(d);
    out.push_back(m);
  }
  return out;
}

FunctionSpaceOnX::FunctionSpaceOnX(std::vector<BasisFunction> basis, Norm norm,
                                   const ManifoldChart& chart)
    : basis_(std::move(basis)), norm_(std::move(norm)) {
  if (static_cast<int>(basis_.size()) != norm_.dim())
    throw std::invalid_argument("FunctionSpaceOnX: norm dimension must match the basis size");
  // Linear independence: the Gram matrix on a sample grid must have full
  // numerical rank.
  int d = dim();
  const int samples = 32 * d;
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Mat values(samples, d);
  for (int s = 0; s < samples; ++s) {
    Vec x(chart.n);
    for (int i = 0; i < chart.n; ++i)
      x[i] = chart.lo[i] + (chart.hi[i] - chart.lo[i]) * unif(eng);
    for (int j = 0; j < d; ++j) values(s, j) = basis_[j].value(x);
  }
  Mat gram = values.transpose() * values / samples;
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  if (es.eigenvalues().minCoeff() < 1e-10 * es.eigenvalues().maxCoeff())
    throw std::invalid_argument("FunctionSpaceOnX: basis numerically dependent on the chart");
}

Vec FunctionSpaceOnX::theta(const Vec& x) const {
  Vec out(dim());
  for (int j = 0; j < dim(); ++j) out[j] = basis_[j].value(x);
  return out;
}

Mat FunctionSpaceOnX::theta_jacobian(const Vec& x) const {
  Mat out(dim(), x.size());
  for (int j = 0; j < dim(); ++j) out.row(j) = basis_[j].gradient(x).transpose();
  return out;
}

double FunctionSpaceOnX::pullback_support(const Vec& x, const Vec& xi) const {
  return norm_.dual(theta_jacobian(x) * xi);
}

FunctionSpaceOnX FunctionSpaceOnX::with_norm(Norm norm) const {
  FunctionSpaceOnX out = *this;
  if (norm.dim() != out.dim())
    throw std::invalid_argument("with_norm: dimension mismatch");
  out.norm_ = std::move(norm);
  return out;
}

Vec BBodyField::support_many(const Vec& x, const Mat& xis) const {
  return space_.norm().dual_many(space_.theta_jacobian(x) * xis);
}

BBodyField bbody_field(const FunctionSpaceOnX& space) { return BBodyField(space); }

BBodyField bbody_field_symmetrized(const FunctionSpaceOnX& space, int resolution) {
  SymmetrizedNorm sn = symmetrize(space.norm(), resolution);
  return BBodyField(space.with_norm(sn.norm));
}

}  // namespace croftonlab
