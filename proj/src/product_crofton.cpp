#include "croftonlab/product_crofton.hpp"

#include <cmath>
#include <limits>

#include "croftonlab/rng.hpp"
#include "croftonlab/sphere_grid.hpp"

namespace croftonlab {

ProductCroftonResult product_crofton_density(const std::vector<Norm>& preduals,
                                             const std::vector<Vec>& edges, long samples,
                                             std::uint64_t seed) {
  int n = static_cast<int>(preduals.size());
  if (n < 1 || n > 2) throw std::invalid_argument("product_crofton_density: n <= 2");
  if (static_cast<int>(edges.size()) != n)
    throw std::invalid_argument("product_crofton_density: one edge per factor dimension");
  if (samples < 2) throw std::invalid_argument("product_crofton_density: samples >= 2");

  std::vector<int> dims(n), offsets(n);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    dims[i] = preduals[i].dim();
    offsets[i] = total;
    total += dims[i];
  }
  for (const Vec& e : edges)
    if (e.size() != total)
      throw std::invalid_argument("product_crofton_density: edge dimension mismatch");

  // Factor Crofton densities; sampling stays unsigned only for zonoids.
  std::vector<GrassmannDensity> phis;
  for (const Norm& predual : preduals) {
    GrassmannDensity phi = crofton_density_for(predual);
    if (phi.min_value() < -1e-4 * std::abs(phi.mean_value()))
      throw unsupported_mode_error(
          "product_crofton_density: non-zonoid factor (signed sampling unsupported)");
    phis.push_back(std::move(phi));
  }

  // Projection of the edge matrix onto factor i: rows of E (total x n).
  Mat E(total, n);
  for (int k = 0; k < n; ++k) E.col(k) = edges[k];

  double sum = 0.0, sumsq = 0.0;
  std::mt19937_64 eng = block_engine(seed, 0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (long s = 0; s < samples; ++s) {
    double w = 1.0;
    Mat A(n, n);  // A(i,k) = <u_i, pi_i(edge_k)>
    Vec t(n);
    for (int i = 0; i < n; ++i) {
      Vec u = uniform_sphere_point(dims[i], eng);
      double phi_val = std::max(0.0, phis[i](u));
      for (int k = 0; k < n; ++k) A(i, k) = u.dot(E.col(k).segment(offsets[i], dims[i]));
      // Offset range over the parallelotope corners.
      double tmin = 0.0, tmax = 0.0;
      for (int corner = 0; corner < (1 << n); ++corner) {
        double proj = 0.0;
        for (int k = 0; k < n; ++k)
          if (corner & (1 << k)) proj += A(i, k);
        tmin = std::min(tmin, proj);
        tmax = std::max(tmax, proj);
      }
      double len = tmax - tmin;
      t[i] = tmin + len * u01(eng);
      w *= 0.5 * phi_val * sphere_surface_area(dims[i]) * len;
    }
    // Hit test: s in [0,1]^n with A s = t.
    double hit = 0.0;
    if (n == 1) {
      if (std::abs(A(0, 0)) > 1e-14) {
        double s0 = t[0] / A(0, 0);
        hit = (s0 >= 0.0 && s0 <= 1.0) ? 1.0 : 0.0;
      }
    } else {
      double det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
      if (std::abs(det) > 1e-14) {
        double s0 = (t[0] * A(1, 1) - A(0, 1) * t[1]) / det;
        double s1 = (A(0, 0) * t[1] - t[0] * A(1, 0)) / det;
        hit = (s0 >= 0.0 && s0 <= 1.0 && s1 >= 0.0 && s1 <= 1.0) ? 1.0 : 0.0;
      }
    }
    double v = w * hit;
    sum += v;
    sumsq += v * v;
  }

  ProductCroftonResult out;
  out.samples = samples;
  out.estimate = sum / samples;
  double var = (sumsq - sum * sum / samples) / (samples - 1.0);
  out.std_error = std::sqrt(std::max(0.0, var) / samples);

  // Density-product prediction for per-factor aligned edges.
  out.predicted = std::numeric_limits<double>::quiet_NaN();
  std::vector<int> owner(n, -1);
  bool aligned = true;
  for (int k = 0; k < n && aligned; ++k) {
    for (int i = 0; i < n; ++i) {
      double norm_i = E.col(k).segment(offsets[i], dims[i]).norm();
      if (norm_i > 1e-14) {
        if (owner[k] != -1) aligned = false;
        owner[k] = i;
      }
    }
    if (owner[k] == -1) {
      out.predicted = 0.0;  // degenerate edge
      aligned = false;
    }
  }
  if (aligned) {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (owner[k] == owner[i] && k != i && owner[k] != -1) aligned = false;
  }
  if (aligned) {
    double pred = 1.0;
    for (int k = 0; k < n; ++k) {
      int i = owner[k];
      pred *= preduals[i].dual(E.col(k).segment(offsets[i], dims[i]));
    }
    out.predicted = pred;
  }
  return out;
}

}  // namespace croftonlab
