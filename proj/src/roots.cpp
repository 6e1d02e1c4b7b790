#include "croftonlab/roots.hpp"

#include <cmath>
#include <cstring>
#include <vector>

namespace croftonlab {

namespace {

// Newton polish of the 2x2 system from a start point; returns true when
// converged to a point within `radius` of the cell center.
bool newton_polish(const std::vector<FunctionSpaceOnX>& spaces, const std::vector<Vec>& c,
                   const Vec& t, const ManifoldChart& chart, Vec& x, double radius,
                   const Vec& center) {
  const double fscale = 1.0 + t.cwiseAbs().maxCoeff();
  for (int it = 0; it < 30; ++it) {
    Vec f(2);
    Mat J(2, 2);
    for (int i = 0; i < 2; ++i) {
      f[i] = c[i].dot(spaces[i].theta(x)) - t[i];
      J.row(i) = (spaces[i].theta_jacobian(x).transpose() * c[i]).transpose();
    }
    double det = J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0);
    if (std::abs(det) < 1e-300) return false;
    Vec step(2);
    step[0] = (f[0] * J(1, 1) - J(0, 1) * f[1]) / det;
    step[1] = (J(0, 0) * f[1] - f[0] * J(1, 0)) / det;
    x -= step;
    if (chart.displacement(center, x).norm() > radius) return false;
    if (step.norm() < 1e-13 * (1.0 + x.norm())) {
      double r0 = c[0].dot(spaces[0].theta(x)) - t[0];
      double r1 = c[1].dot(spaces[1].theta(x)) - t[1];
      return std::abs(r0) < 1e-9 * fscale && std::abs(r1) < 1e-9 * fscale;
    }
  }
  return false;
}

}  // namespace

SolutionCounter::SolutionCounter(std::vector<FunctionSpaceOnX> spaces, ManifoldChart chart,
                                 Box U, CountOptions opts)
    : spaces_(std::move(spaces)), chart_(std::move(chart)), U_(std::move(U)), opts_(opts) {
  int n = chart_.n;
  if (n < 1 || n > 2)
    throw std::invalid_argument("SolutionCounter: chart dimension must be 1 or 2");
  if (static_cast<int>(spaces_.size()) != n)
    throw std::invalid_argument("SolutionCounter: one function space per equation");
  if (n == 1) {
    m1_ = opts_.grid_1d;
    int count = m1_ + 1;
    nodes_.resize(1, count);
    for (int j = 0; j < count; ++j)
      nodes_(0, j) = U_.lo[0] + (U_.hi[0] - U_.lo[0]) * j / m1_;
  } else {
    m2_ = opts_.grid_2d;
    int side = m2_ + 1;
    nodes_.resize(2, side * side);
    for (int i = 0; i < side; ++i)
      for (int j = 0; j < side; ++j) {
        int p = i * side + j;
        nodes_(0, p) = U_.lo[0] + (U_.hi[0] - U_.lo[0]) * i / m2_;
        nodes_(1, p) = U_.lo[1] + (U_.hi[1] - U_.lo[1]) * j / m2_;
      }
  }
  for (std::size_t f = 0; f < spaces_.size(); ++f) {
    Mat tg(nodes_.cols(), spaces_[f].dim());
    for (int p = 0; p < nodes_.cols(); ++p)
      tg.row(p) = spaces_[f].theta(nodes_.col(p)).transpose();
    theta_grids_.push_back(std::move(tg));
  }
}

int SolutionCounter::count(const std::vector<Vec>& coefficients, const Vec& offsets,
                           bool* uncertain) const {
  if (uncertain) *uncertain = false;
  if (chart_.n == 1) return count_1d(coefficients[0], offsets[0], uncertain);
  return count_2d(coefficients, offsets, uncertain);
}

int SolutionCounter::count_1d(const Vec& c, double t, bool*) const {
  Vec g = theta_grids_[0] * c;
  g.array() -= t;
  auto f = [&](double x) {
    Vec p(1);
    p[0] = x;
    return c.dot(spaces_[0].theta(p)) - t;
  };
  int roots = 0;
  const double* gd = g.data();
  for (int j = 0; j < m1_; ++j) {
    double a = gd[j], b = gd[j + 1];
    if (a == 0.0) {
      // Node hit: counted once, transversal when the sign flips across it.
      if (j > 0 && gd[j - 1] * b < 0.0) ++roots;
      continue;
    }
    if (a * b >= 0.0) continue;
    // Bisection confirms the transversal crossing.
    double x0 = nodes_(0, j), x1 = nodes_(0, j + 1);
    double fa = a;
    for (int it = 0; it < 20; ++it) {
      double mid = 0.5 * (x0 + x1);
      double fm = f(mid);
      if (fa * fm <= 0.0)
        x1 = mid;
      else {
        x0 = mid;
        fa = fm;
      }
    }
    ++roots;
  }
  return roots;
}

int SolutionCounter::count_2d(const std::vector<Vec>& c, const Vec& t, bool* uncertain) const {
  int side = m2_ + 1;
  // Sign fields of both residuals over the nodes.
  Vec g0 = theta_grids_[0] * c[0];
  g0.array() -= t[0];
  Vec g1 = theta_grids_[1] * c[1];
  g1.array() -= t[1];
  using CharArr = Eigen::Array<char, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::Map<const Eigen::ArrayXXd> G0(g0.data(), side, side);
  Eigen::Map<const Eigen::ArrayXXd> G1(g1.data(), side, side);
  CharArr S0 = (G0 > 0.0).cast<char>();
  CharArr S1 = (G1 > 0.0).cast<char>();
  CharArr C0 = S0.topLeftCorner(m2_, m2_) + S0.bottomLeftCorner(m2_, m2_) +
               S0.topRightCorner(m2_, m2_) + S0.bottomRightCorner(m2_, m2_);
  CharArr C1 = S1.topLeftCorner(m2_, m2_) + S1.bottomLeftCorner(m2_, m2_) +
               S1.topRightCorner(m2_, m2_) + S1.bottomRightCorner(m2_, m2_);
  CharArr flags = ((C0 > char(0)) && (C0 < char(4)) && (C1 > char(0)) && (C1 < char(4)))
                      .cast<char>();

  const double hx = (U_.hi[0] - U_.lo[0]) / m2_;
  const double hy = (U_.hi[1] - U_.lo[1]) / m2_;
  const double cell_diag = std::hypot(hx, hy);
  std::vector<Vec> roots;

  auto try_cell = [&](double cx, double cy, double radius, int depth, auto&& self) -> void {
    Vec center(2);
    center << cx, cy;
    Vec x = center;
    if (newton_polish(spaces_, c, t, chart_, x, radius, center)) {
      roots.push_back(x);
      return;
    }
    if (depth >= 3) {
      if (uncertain) *uncertain = true;
      return;
    }
    double q = radius / 2.0;
    for (int a = -1; a <= 1; a += 2)
      for (int b = -1; b <= 1; b += 2)
        self(cx + a * q / 2.0, cy + b * q / 2.0, q, depth + 1, self);
  };

  // Scan the flag array (column-major, contiguous) in 8-byte strides.
  const char* data = flags.data();
  const std::size_t count = static_cast<std::size_t>(m2_) * m2_;
  std::size_t p = 0;
  while (p < count) {
    if (p + 8 <= count) {
      std::uint64_t chunk;
      std::memcpy(&chunk, data + p, 8);
      if (chunk == 0) {
        p += 8;
        continue;
      }
    }
    if (data[p]) {
      // Column-major: columns index coordinate 0, rows coordinate 1.
      int i = static_cast<int>(p / m2_);
      int j = static_cast<int>(p % m2_);
      double cx = U_.lo[0] + (i + 0.5) * hx;
      double cy = U_.lo[1] + (j + 0.5) * hy;
      try_cell(cx, cy, 1.6 * cell_diag, 0, try_cell);
    }
    ++p;
  }

  // Deduplicate within the merge radius, respecting periodic wrap.
  const double merge = opts_.merge_radius_rel * chart_.diameter();
  std::vector<Vec> unique_roots;
  for (const Vec& r : roots) {
    bool dup = false;
    for (const Vec& u : unique_roots)
      if (chart_.displacement(u, r).norm() < merge) {
        dup = true;
        break;
      }
    if (!dup) unique_roots.push_back(r);
  }
  // Keep only roots inside U (wrapped into the chart domain first).
  int n_in = 0;
  for (Vec r : unique_roots) {
    for (int i = 0; i < 2; ++i) {
      if (!chart_.periodic[i]) continue;
      double period = chart_.hi[i] - chart_.lo[i];
      r[i] = chart_.lo[i] + std::fmod(std::fmod(r[i] - chart_.lo[i], period) + period, period);
    }
    if (r[0] >= U_.lo[0] - 1e-12 && r[0] < U_.hi[0] + 1e-12 && r[1] >= U_.lo[1] - 1e-12 &&
        r[1] < U_.hi[1] + 1e-12)
      ++n_in;
  }
  return n_in;
}

}  // namespace croftonlab
