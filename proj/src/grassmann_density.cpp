#include "croftonlab/grassmann_density.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace croftonlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double GrassmannDensity::operator()(const Vec& direction) const {
  Vec d = direction.normalized();
  if (evaluator) return evaluator(d);
  if (dim == 2) {
    // Periodic linear interpolation over the uniform angle grid.
    int n = static_cast<int>(values.size());
    double th = std::atan2(d[1], d[0]);
    if (th < 0) th += 2.0 * kPi;
    double s = th / (2.0 * kPi) * n;
    int i0 = static_cast<int>(std::floor(s)) % n;
    int i1 = (i0 + 1) % n;
    double t = s - std::floor(s);
    return (1.0 - t) * values[i0] + t * values[i1];
  }
  // Inverse-distance interpolation over the nearest grid points.
  Vec d2 = (directions.colwise() - d).colwise().squaredNorm().transpose();
  double num = 0.0, den = 0.0;
  for (int pass = 0; pass < 6; ++pass) {
    int i;
    d2.minCoeff(&i);
    double dist = std::sqrt(d2[i]);
    if (dist < 1e-12) return values[i];
    double w = 1.0 / dist;
    num += w * values[i];
    den += w;
    d2[i] = 1e30;
  }
  return num / den;
}

GrassmannDensity GrassmannDensity::from_function(int dim,
                                                 const std::function<double(const Vec&)>& f,
                                                 int resolution) {
  SphereQuadrature q = euclidean_sphere_grid(dim, resolution);
  GrassmannDensity g;
  g.dim = dim;
  g.directions = q.points;
  g.values.resize(q.size());
  for (int i = 0; i < q.size(); ++i) g.values[i] = f(q.points.col(i));
  g.evaluator = f;
  return g;
}

GrassmannDensity GrassmannDensity::constant(int dim, double c, int resolution) {
  return from_function(dim, [c](const Vec&) { return c; }, resolution);
}

void GrassmannDensity::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (int i = 0; i < directions.cols(); ++i) {
    for (int r = 0; r < directions.rows(); ++r) out << directions(r, i) << ",";
    out << values[i] << "\n";
  }
}

}  // namespace croftonlab
