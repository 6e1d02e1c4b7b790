#include "croftonlab/support_body.hpp"

#include <cmath>
#include <limits>

#include "croftonlab/norm.hpp"
#include "croftonlab/sphere_grid.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Volume by radial integration of the circumscribed polytope: the radial
// function in direction v is min over grid directions u of h(u)/<u,v>.
double volume_at_resolution(const SupportFn& h, int m, int n_dirs) {
  if (m == 1) {
    Mat dirs(1, 2);
    dirs << 1.0, -1.0;
    Vec hv = h(dirs);
    double len = hv[0] + hv[1];
    if (len < -1e-12) throw invalid_body_error("body_volume: empty intersection");
    return std::max(0.0, len);
  }
  SphereQuadrature grid =
      m == 2 ? circle_grid(n_dirs) : icosphere_grid(n_dirs);
  Vec hv = h(grid.points);
  // Sublinearity screen: h(u) + h(-u) >= 0 (antipodal grids pair i with
  // the point -u_i present in the grid).
  double hmin = hv.minCoeff();
  if (hmin < 0.0) {
    for (int i = 0; i < grid.size(); ++i) {
      if (hv[i] >= 0.0) continue;
      Vec u = -grid.points.col(i);
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < grid.size(); ++j)
        if ((grid.points.col(j) - u).norm() < 1e-9) best = hv[j];
      if (std::isfinite(best) && hv[i] + best < -1e-10)
        throw invalid_body_error("body_volume: empty intersection (h(u)+h(-u) < 0)");
    }
  }
  if (m == 2) {
    // Exact area of the circumscribed tangent polygon: every tangent line
    // of a genuine support function touches the polygon, so consecutive
    // tangent lines intersect in its vertices (zero-length edges are
    // harmless) and the shoelace sum is the exact area.  Exactness makes
    // the mixed-volume polarization consistent even for degenerate
    // (segment-like) bodies, where radial quadrature misses the thin
    // circumscribed slivers at O(1/n).
    const int n = grid.size();
    double area = 0.0;
    double px = 0.0, py = 0.0, x0 = 0.0, y0 = 0.0;
    const double bound = 1e9 * (1.0 + hv.cwiseAbs().maxCoeff());
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      double ax = grid.points(0, i), ay = grid.points(1, i);
      double bx = grid.points(0, j), by = grid.points(1, j);
      double det = ax * by - ay * bx;  // sin of the angle step
      double vx = (hv[i] * by - ay * hv[j]) / det;
      double vy = (ax * hv[j] - hv[i] * bx) / det;
      if (!std::isfinite(vx) || !std::isfinite(vy) || std::hypot(vx, vy) > bound)
        throw invalid_body_error("body_volume: unbounded intersection");
      if (i == 0) {
        x0 = vx;
        y0 = vy;
      } else {
        area += px * vy - py * vx;
      }
      px = vx;
      py = vy;
    }
    area += px * y0 - py * x0;
    return std::max(0.0, 0.5 * area);
  }
  // Quadrature directions: the same grid; radial function per direction.
  const Mat& U = grid.points;
  double acc = 0.0;
  for (int q = 0; q < grid.size(); ++q) {
    Vec v = U.col(q);
    Vec proj = U.transpose() * v;
    double r = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid.size(); ++j) {
      if (proj[j] <= 1e-9) continue;
      double cand = hv[j] / proj[j];
      if (cand < r) r = cand;
    }
    if (!std::isfinite(r)) throw invalid_body_error("body_volume: unbounded intersection");
    r = std::max(0.0, r);
    acc += grid.weights[q] * std::pow(r, m) / m;
  }
  return acc;
}

}  // namespace

SupportFn support_of_norm_dual(const Norm& norm) {
  Norm copy = norm;
  return [copy](const Mat& dirs) { return copy.dual_many(dirs); };
}

double body_volume(const SupportFn& h, int m, int directions) {
  if (m < 1 || m > 3) throw std::invalid_argument("body_volume: m must be in {1,2,3}");
  if (m == 1) return volume_at_resolution(h, 1, 0);
  if (directions > 0) {
    // Explicit grid: single shot, no refinement (callers running many
    // correlated volume evaluations pin the grid themselves).
    return volume_at_resolution(h, m, directions);
  }
  int res = m == 2 ? 256 : 3;
  double prev = volume_at_resolution(h, m, res);
  for (int it = 0; it < 3; ++it) {
    int next_res = m == 2 ? 2 * res : res + 1;
    double next = volume_at_resolution(h, m, next_res);
    if (std::abs(next - prev) <= 1e-3 * std::max(std::abs(next), 1e-300)) return next;
    prev = next;
    res = next_res;
  }
  return prev;
}

double mixed_volume(const std::vector<SupportFn>& bodies, int directions) {
  int m = static_cast<int>(bodies.size());
  if (m < 1 || m > 3) throw std::invalid_argument("mixed_volume: 1 to 3 bodies");
  if (m == 1) return body_volume(bodies[0], 1, directions);
  // Polarization: (1/m!) sum over nonempty S of (-1)^(m-|S|) vol(sum_S A_i).
  double acc = 0.0;
  for (int mask = 1; mask < (1 << m); ++mask) {
    int bits = __builtin_popcount(static_cast<unsigned>(mask));
    SupportFn sum = [&bodies, mask, m](const Mat& dirs) {
      Vec out = Vec::Zero(dirs.cols());
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) out += bodies[i](dirs);
      return out;
    };
    double sign = ((m - bits) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * body_volume(sum, m, directions);
  }
  double fact = m == 2 ? 2.0 : 6.0;
  return acc / fact;
}

}  // namespace croftonlab
