#include "croftonlab/norm.hpp"

#include <cmath>
#include <random>

#include "croftonlab/sphere_grid.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

bool finite(const Vec& v) { return v.allFinite(); }

}  // namespace

Norm Norm::euclidean(int dim) { return euclidean(Mat::Identity(dim, dim)); }

Norm Norm::euclidean(const Mat& quadratic_form) {
  require(quadratic_form.rows() == quadratic_form.cols(), "euclidean: square matrix required");
  int d = static_cast<int>(quadratic_form.rows());
  require(d >= 2 && d <= 4, "euclidean: dim must be in [2,4]");
  require((quadratic_form - quadratic_form.transpose()).cwiseAbs().maxCoeff() < 1e-12,
          "euclidean: symmetric matrix required");
  Eigen::LLT<Mat> llt(quadratic_form);
  require(llt.info() == Eigen::Success, "euclidean: positive definite matrix required");
  Norm n;
  n.kind_ = NormKind::Euclidean;
  n.dim_ = d;
  n.form_ = quadratic_form;
  n.form_inv_ = llt.solve(Mat::Identity(d, d));
  return n;
}

Norm Norm::lp(double p, int dim) {
  require(std::isfinite(p) && p > 1.0, "lp: exponent must lie in (1, inf)");
  require(dim >= 2 && dim <= 4, "lp: dim must be in [2,4]");
  Norm n;
  n.kind_ = NormKind::Lp;
  n.dim_ = dim;
  n.p_ = p;
  return n;
}

Norm Norm::support_sampled(const Vec& gauge_values) {
  int m = static_cast<int>(gauge_values.size());
  require(m >= 8 && m % 2 == 0, "support_sampled: even grid of size >= 8 required");
  require(gauge_values.allFinite() && gauge_values.minCoeff() > 0.0,
          "support_sampled: gauge must be positive on every ray");
  Norm n;
  n.kind_ = NormKind::SupportSampled;
  n.dim_ = 2;
  n.values_ = gauge_values;
  // Evenness on the grid.
  for (int k = 0; k < m / 2; ++k)
    require(std::abs(gauge_values[k] - gauge_values[k + m / 2]) <
                1e-8 * gauge_values.cwiseAbs().maxCoeff(),
            "support_sampled: gauge must be even");
  // Boundary points of the unit ball at grid angles and midpoints; the
  // dual norm is the grid maximum of <xi, .> over them.
  int dense = 4 * m;
  n.boundary_.resize(2, dense);
  for (int k = 0; k < dense; ++k) {
    double th = 2.0 * kPi * k / dense;
    Vec u(2);
    u << std::cos(th), std::sin(th);
    n.boundary_.col(k) = u / n.interp_gauge_on_circle(th);
  }
  n.validate();
  return n;
}

Norm Norm::support_sampled_from_gauge(const std::function<double(const Vec&)>& gauge,
                                      int grid) {
  Vec vals(grid);
  for (int k = 0; k < grid; ++k) {
    double th = 2.0 * kPi * k / grid;
    Vec u(2);
    u << std::cos(th), std::sin(th);
    vals[k] = gauge(u);
  }
  return support_sampled(vals);
}

Norm Norm::zonotope(const Mat& generators, double smoothing) {
  int d = static_cast<int>(generators.rows());
  require(d >= 2 && d <= 4, "zonotope: dim must be in [2,4]");
  require(generators.cols() >= 1 && generators.allFinite(), "zonotope: generators required");
  require(smoothing >= 0.0, "zonotope: smoothing must be nonnegative");
  require(smoothing > 0.0 || generators.cols() >= d, "zonotope: degenerate body");
  Norm n;
  n.kind_ = NormKind::Zonotope;
  n.dim_ = d;
  n.gens_ = generators;
  n.smoothing_ = smoothing;
  n.build_dual_ball_grid(d == 2 ? 1024 : 2562);
  return n;
}

Norm Norm::from_atoms(const Mat& atoms, const Vec& weights) {
  int d = static_cast<int>(atoms.rows());
  require(d >= 2 && d <= 4, "from_atoms: dim must be in [2,4]");
  require(atoms.cols() == weights.size() && weights.minCoeff() > 0.0,
          "from_atoms: positive weights required");
  Norm n;
  n.kind_ = NormKind::Atomic;
  n.dim_ = d;
  n.atoms_ = atoms;
  n.atom_w_ = weights;
  n.build_dual_ball_grid(d == 2 ? 1024 : 2562);
  return n;
}

void Norm::build_dual_ball_grid(int count) {
  // Grid-max recovery of the gauge from the dual norm:
  //   gauge(v) = sup_xi <v, xi> / dual(xi).
  SphereQuadrature q = dim_ == 2 ? circle_grid(count)
                                 : (dim_ == 3 ? icosphere_grid(4) : s3_product_grid(24));
  dual_grid_ = q.points;
  dual_grid_vals_ = dual_many(dual_grid_);
}

double Norm::interp_gauge_on_circle(double theta) const {
  int m = static_cast<int>(values_.size());
  double s = theta / (2.0 * kPi) * m;
  double fl = std::floor(s);
  double t = s - fl;
  int i1 = ((static_cast<int>(fl) % m) + m) % m;
  int i0 = (i1 + m - 1) % m;
  int i2 = (i1 + 1) % m;
  int i3 = (i1 + 2) % m;
  double p0 = values_[i0], p1 = values_[i1], p2 = values_[i2], p3 = values_[i3];
  // Catmull-Rom, periodic.
  return p1 + 0.5 * t * (p2 - p0 + t * (2 * p0 - 5 * p1 + 4 * p2 - p3 +
                                        t * (3 * (p1 - p2) + p3 - p0)));
}

double Norm::gauge(const Vec& v) const {
  require(finite(v) && v.size() == dim_, "gauge: finite vector of the right dimension required");
  double r = v.norm();
  if (r == 0.0) return 0.0;
  switch (kind_) {
    case NormKind::Euclidean:
      return std::sqrt(v.dot(form_ * v));
    case NormKind::Lp:
      return v.cwiseAbs().array().pow(p_).sum() == 0.0
                 ? 0.0
                 : std::pow(v.cwiseAbs().array().pow(p_).sum(), 1.0 / p_);
    case NormKind::SupportSampled:
      return r * interp_gauge_on_circle(std::atan2(v[1], v[0]));
    case NormKind::Zonotope:
    case NormKind::Atomic: {
      return ((dual_grid_.transpose() * v).array() / dual_grid_vals_.array()).maxCoeff();
    }
  }
  return 0.0;
}

Vec Norm::gauge_gradient(const Vec& v) const {
  require(finite(v) && v.norm() > 0.0, "gauge_gradient: nonzero finite vector required");
  switch (kind_) {
    case NormKind::Euclidean: {
      double g = gauge(v);
      return (form_ * v) / g;
    }
    case NormKind::Lp: {
      double g = gauge(v);
      Vec out(dim_);
      for (int i = 0; i < dim_; ++i) {
        double a = std::abs(v[i]);
        out[i] = (v[i] >= 0 ? 1.0 : -1.0) * std::pow(a, p_ - 1.0) * std::pow(g, 1.0 - p_);
      }
      return out;
    }
    default: {
      double h = 1e-6 * std::max(1.0, v.norm());
      Vec out(dim_);
      for (int i = 0; i < dim_; ++i) {
        Vec a = v, b = v;
        a[i] += h;
        b[i] -= h;
        out[i] = (gauge(a) - gauge(b)) / (2.0 * h);
      }
      return out;
    }
  }
}

double Norm::dual(const Vec& xi) const {
  require(finite(xi) && xi.size() == dim_, "dual: finite vector of the right dimension required");
  switch (kind_) {
    case NormKind::Euclidean:
      return std::sqrt(xi.dot(form_inv_ * xi));
    case NormKind::Lp: {
      double q = p_ / (p_ - 1.0);
      double s = xi.cwiseAbs().array().pow(q).sum();
      return s == 0.0 ? 0.0 : std::pow(s, 1.0 / q);
    }
    case NormKind::SupportSampled:
      return (boundary_.transpose() * xi).maxCoeff();
    case NormKind::Zonotope:
      return (gens_.transpose() * xi).cwiseAbs().sum() + smoothing_ * xi.norm();
    case NormKind::Atomic:
      return 0.5 * atom_w_.dot((atoms_.transpose() * xi).cwiseAbs());
  }
  return 0.0;
}

Vec Norm::dual_many(const Mat& xis) const {
  switch (kind_) {
    case NormKind::Euclidean:
      return ((xis.transpose() * form_inv_).cwiseProduct(xis.transpose()))
          .rowwise()
          .sum()
          .cwiseSqrt();
    case NormKind::Lp: {
      double q = p_ / (p_ - 1.0);
      return xis.cwiseAbs().array().pow(q).colwise().sum().pow(1.0 / q).matrix().transpose();
    }
    case NormKind::SupportSampled:
      return (boundary_.transpose() * xis).colwise().maxCoeff().transpose();
    case NormKind::Zonotope:
      return ((gens_.transpose() * xis).cwiseAbs().colwise().sum() +
              smoothing_ * xis.colwise().norm())
          .transpose();
    case NormKind::Atomic:
      return 0.5 * (atoms_.transpose() * xis).cwiseAbs().transpose() * atom_w_;
  }
  return Vec();
}

void Norm::validate() const {
  // Convexity spot check on random pairs (support-sampled grids must pass
  // before use).
  std::mt19937_64 eng(12345);
  std::normal_distribution<double> g01(0.0, 1.0);
  for (int it = 0; it < 256; ++it) {
    Vec a(dim_), b(dim_);
    for (int i = 0; i < dim_; ++i) {
      a[i] = g01(eng);
      b[i] = g01(eng);
    }
    double lhs = gauge(a + b);
    double rhs = gauge(a) + gauge(b);
    // The 1e-2 slack absorbs interpolation overshoot near gauge kinks.
    if (lhs > rhs * (1.0 + 1e-2) + 1e-12)
      throw std::invalid_argument("support_sampled: gauge fails convexity on the grid");
  }
}

}  // namespace croftonlab
