#include "croftonlab/cosine.hpp"

#include <cmath>
#include <vector>

#include "croftonlab/harmonics.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// GL nodes split at c = 0 so the |cos| kink never degrades the rule.
std::pair<Vec, Vec> split_gauss_legendre(int n_half) {
  auto [x, w] = gauss_legendre(n_half);
  Vec xs(2 * n_half), ws(2 * n_half);
  for (int i = 0; i < n_half; ++i) {
    xs[i] = 0.5 * (x[i] - 1.0);  // [-1, 0]
    ws[i] = 0.5 * w[i];
    xs[n_half + i] = 0.5 * (x[i] + 1.0);  // [0, 1]
    ws[n_half + i] = 0.5 * w[i];
  }
  return {xs, ws};
}

Mat rotation_to_pole(const Vec& g) {
  // Orthonormal frame with the last column along g.
  int d = static_cast<int>(g.size());
  Vec ghat = g.normalized();
  Eigen::HouseholderQR<Mat> qr(ghat);
  Mat Q = qr.householderQ();
  Mat out(d, d);
  out.leftCols(d - 1) = Q.rightCols(d - 1);
  out.col(d - 1) = ghat;
  return out;
}

struct CircularCoeffs {
  Vec a;  // cos(2k theta), k = 0..K
  Vec b;  // sin(2k theta), k = 1..K
};

CircularCoeffs analyze_circle(const GrassmannDensity& f, int K, int n_grid) {
  CircularCoeffs c;
  c.a = Vec::Zero(K + 1);
  c.b = Vec::Zero(K + 1);
  double dth = 2.0 * kPi / n_grid;
  for (int j = 0; j < n_grid; ++j) {
    double th = dth * j;
    Vec dir(2);
    dir << std::cos(th), std::sin(th);
    double v = f(dir);
    c.a[0] += v * dth / (2.0 * kPi);
    for (int k = 1; k <= K; ++k) {
      c.a[k] += v * std::cos(2.0 * k * th) * dth / kPi;
      c.b[k] += v * std::sin(2.0 * k * th) * dth / kPi;
    }
  }
  return c;
}

struct SphericalCoeffs {
  int L;
  // c[(l/2)][m + l] for even l.
  std::vector<Vec> c;
};

SphericalCoeffs analyze_sphere(const GrassmannDensity& f, int L) {
  int n_t = 2 * L + 12, n_p = 2 * L + 12;
  auto [ct, wt] = gauss_legendre(n_t);
  SphericalCoeffs out;
  out.L = L;
  out.c.resize(L / 2 + 1);
  for (int l = 0; l <= L; l += 2) out.c[l / 2] = Vec::Zero(2 * l + 1);
  for (int i = 0; i < n_t; ++i) {
    double theta = std::acos(ct[i]);
    double st = std::sin(theta);
    for (int j = 0; j < n_p; ++j) {
      double phi = 2.0 * kPi * j / n_p;
      Vec dir(3);
      dir << st * std::cos(phi), st * std::sin(phi), ct[i];
      double v = f(dir);
      double w = wt[i] * (2.0 * kPi / n_p);
      for (int l = 0; l <= L; l += 2)
        for (int m = -l; m <= l; ++m)
          out.c[l / 2][m + l] += v * real_sph_harmonic(l, m, theta, phi) * w;
    }
  }
  return out;
}

}  // namespace

double cosine_eigenvalue(int dim, int l) {
  if (dim == 2) {
    // l counts the even circular harmonic cos(2l theta).
    static std::vector<double> cache;
    if (l >= static_cast<int>(cache.size())) {
      int old = static_cast<int>(cache.size());
      cache.resize(l + 1);
      for (int k = old; k <= l; ++k) {
        // 0.5 * integral over the circle of |cos t| cos(2kt), split at the
        // kinks of |cos|.
        auto piece = [&](double a, double b) {
          auto [x, w] = gauss_legendre(32);
          double s = 0.0;
          for (int i = 0; i < x.size(); ++i) {
            double th = 0.5 * (b - a) * x[i] + 0.5 * (a + b);
            s += 0.5 * (b - a) * w[i] * std::abs(std::cos(th)) * std::cos(2.0 * k * th);
          }
          return s;
        };
        double v = piece(-0.5 * kPi, 0.5 * kPi) + piece(0.5 * kPi, 1.5 * kPi);
        cache[k] = 0.5 * v;
      }
    }
    return cache[l];
  }
  if (dim == 3) {
    static std::vector<double> cache;
    if (l >= static_cast<int>(cache.size())) {
      auto [xs, ws] = split_gauss_legendre(96);
      int old = static_cast<int>(cache.size());
      cache.resize(l + 1);
      for (int k = old; k <= l; ++k) {
        double num = 0.0;
        for (int i = 0; i < xs.size(); ++i) {
          double theta = std::acos(xs[i]);
          num += ws[i] * std::abs(xs[i]) * std::sph_legendre(k, 0, theta);
        }
        num *= 0.5 * 2.0 * kPi;
        cache[k] = num / std::sph_legendre(k, 0, 0.0);
      }
    }
    return cache[l];
  }
  throw std::invalid_argument("cosine_eigenvalue: dim must be 2 or 3");
}

double cosine_transform(const GrassmannDensity& f, const Vec& g) {
  Vec ghat = g.normalized();
  if (f.dim == 2) {
    const int n = 2048;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      double th = 2.0 * kPi * j / n;
      Vec dir(2);
      dir << std::cos(th), std::sin(th);
      acc += std::abs(dir.dot(ghat)) * f(dir) * (2.0 * kPi / n) * 0.5;
    }
    return acc;
  }
  if (f.dim == 3) {
    // Frame with ghat as the pole; split GL in cos(theta) resolves |cos|.
    Mat R = rotation_to_pole(ghat);
    auto [cs, ws] = split_gauss_legendre(48);
    const int n_p = 96;
    double acc = 0.0;
    for (int i = 0; i < cs.size(); ++i) {
      double st = std::sqrt(std::max(0.0, 1.0 - cs[i] * cs[i]));
      for (int j = 0; j < n_p; ++j) {
        double phi = 2.0 * kPi * j / n_p;
        Vec local(3);
        local << st * std::cos(phi), st * std::sin(phi), cs[i];
        Vec dir = R * local;
        acc += 0.5 * std::abs(cs[i]) * f(dir) * ws[i] * (2.0 * kPi / n_p);
      }
    }
    return acc;
  }
  throw std::invalid_argument("cosine_transform: dim must be 2 or 3");
}

GrassmannDensity invert_cosine_transform(const GrassmannDensity& target, double regularization,
                                         int max_degree, double residual_tol,
                                         InversionReport* report) {
  if (target.dim == 2) {
    int K = max_degree > 0 ? max_degree / 2 : 64;
    const int n_grid = 4096;
    CircularCoeffs c = analyze_circle(target, K, n_grid);
    Vec pa = Vec::Zero(K + 1), pb = Vec::Zero(K + 1);
    for (int k = 0; k <= K; ++k) {
      double lam = cosine_eigenvalue(2, k);
      double f = lam / (lam * lam + regularization);
      pa[k] = c.a[k] * f;
      pb[k] = c.b[k] * f;
    }
    auto phi = [pa, pb, K](const Vec& dir) {
      double th = std::atan2(dir[1], dir[0]);
      double acc = pa[0];
      for (int k = 1; k <= K; ++k)
        acc += pa[k] * std::cos(2.0 * k * th) + pb[k] * std::sin(2.0 * k * th);
      return acc;
    };
    GrassmannDensity out = GrassmannDensity::from_function(2, phi, 4096);
    // Residual of the reconstruction.
    double res = 0.0;
    for (int j = 0; j < 512; ++j) {
      double th = 2.0 * kPi * j / 512;
      Vec dir(2);
      dir << std::cos(th), std::sin(th);
      double recon = 0.0;
      for (int k = 0; k <= K; ++k) {
        double lam = cosine_eigenvalue(2, k);
        double h = k == 0 ? 1.0 : std::cos(2.0 * k * th);
        recon += lam * pa[k] * h;
        if (k > 0) recon += lam * pb[k] * std::sin(2.0 * k * th);
      }
      res = std::max(res, std::abs(recon - target(dir)));
    }
    if (report) {
      report->residual_sup = res;
      report->degree = 2 * K;
    }
    if (res > residual_tol)
      throw non_convergence_error("invert_cosine_transform: residual above tolerance", res);
    return out;
  }
  if (target.dim == 3) {
    int L = max_degree > 0 ? max_degree : 16;
    if (L % 2 == 1) --L;
    SphericalCoeffs c = analyze_sphere(target, L);
    SphericalCoeffs p = c;
    for (int l = 0; l <= L; l += 2) {
      double lam = cosine_eigenvalue(3, l);
      double f = lam / (lam * lam + regularization);
      p.c[l / 2] *= f;
    }
    auto phi = [p, L](const Vec& dir) {
      double acc = 0.0;
      for (int l = 0; l <= L; l += 2)
        for (int m = -l; m <= l; ++m) acc += p.c[l / 2][m + l] * real_sph_harmonic(l, m, dir);
      return acc;
    };
    GrassmannDensity out = GrassmannDensity::from_function(3, phi, 4);
    double res = 0.0;
    SphereQuadrature test = icosphere_grid(3);
    for (int i = 0; i < test.size(); ++i) {
      Vec dir = test.points.col(i);
      double recon = 0.0;
      for (int l = 0; l <= L; l += 2) {
        double lam = cosine_eigenvalue(3, l);
        for (int m = -l; m <= l; ++m)
          recon += lam * p.c[l / 2][m + l] * real_sph_harmonic(l, m, dir);
      }
      res = std::max(res, std::abs(recon - target(dir)));
    }
    if (report) {
      report->residual_sup = res;
      report->degree = L;
    }
    if (res > residual_tol)
      throw non_convergence_error("invert_cosine_transform: residual above tolerance", res);
    return out;
  }
  throw std::invalid_argument("invert_cosine_transform: dim must be 2 or 3");
}

GrassmannDensity crofton_density_for(const Norm& space, double regularization, int max_degree,
                                     InversionReport* report) {
  Norm copy = space;  // keep the evaluator self-contained
  GrassmannDensity target = GrassmannDensity::from_function(
      space.dim(), [copy](const Vec& d) { return copy.dual(d); }, space.dim() == 2 ? 4096 : 4);
  return invert_cosine_transform(target, regularization, max_degree, 1e-2, report);
}

ZonoidReport zonoid_check(const Norm& space, double regularization, int max_degree) {
  if (space.dim() > 3)
    throw std::invalid_argument("zonoid_check: dim <= 3 required");
  Norm copy = space;
  GrassmannDensity target = GrassmannDensity::from_function(
      space.dim(), [copy](const Vec& d) { return copy.dual(d); }, space.dim() == 2 ? 4096 : 4);
  GrassmannDensity phi = invert_cosine_transform(target, regularization, max_degree, 0.2);
  ZonoidReport rep;
  rep.min_density = phi.min_value();
  rep.mean_density = phi.mean_value();
  rep.is_zonoid = rep.min_density >= -1e-4 * rep.mean_density;
  return rep;
}

}  // namespace croftonlab
