#include "croftonlab/banach.hpp"

#include <cmath>

#include "croftonlab/rng.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Orthonormal basis of the hyperplane orthogonal to n (Euclidean).
Mat tangent_frame(const Vec& n_unit) {
  int d = static_cast<int>(n_unit.size());
  Mat frame(d, d - 1);
  Eigen::HouseholderQR<Mat> qr(n_unit);
  Mat Q = qr.householderQ();
  frame = Q.rightCols(d - 1);
  return frame;
}

// Lebesgue volume of {v in span(frame) : gauge(v) <= 1} by polar
// integration of the radial function.
double tangent_ball_volume(const Norm& space, const Mat& frame) {
  int k = static_cast<int>(frame.cols());
  if (k == 1) {
    double g = space.gauge(frame.col(0));
    if (g <= 0.0) throw std::invalid_argument("tangent_ball_volume: degenerate gauge");
    return 2.0 / g;
  }
  if (k == 2) {
    const int nq = 128;
    double acc = 0.0;
    for (int i = 0; i < nq; ++i) {
      double th = 2.0 * kPi * (i + 0.5) / nq;
      Vec dir = frame.col(0) * std::cos(th) + frame.col(1) * std::sin(th);
      double g = space.gauge(dir);
      acc += 0.5 / (g * g) * (2.0 * kPi / nq);
    }
    return acc;
  }
  // k == 3
  static const SphereQuadrature s2 = icosphere_grid(2);
  double acc = 0.0;
  for (int i = 0; i < s2.size(); ++i) {
    Vec dir = frame * s2.points.col(i);
    double g = space.gauge(dir);
    acc += s2.weights[i] / (3.0 * g * g * g);
  }
  return acc;
}

}  // namespace

double sphere_density(const Norm& space, const Vec& x) {
  double g = space.gauge(x);
  if (std::abs(g - 1.0) > 1e-6)
    throw std::invalid_argument("sphere_density: x must lie on the unit sphere of the norm");
  Vec n = space.gauge_gradient(x);
  n.normalize();
  Mat frame = tangent_frame(n);
  return 1.0 / tangent_ball_volume(space, frame);
}

double radial_rescale_jacobian(const Norm& space, const Vec& u) {
  int d = space.dim();
  double g = space.gauge(u);
  double r = 1.0 / g;
  Vec grad = space.gauge_gradient(u);
  Vec grad_s = grad - grad.dot(u) * u;  // tangential part on the Euclidean sphere
  double grad_r = grad_s.norm() / (g * g);
  return std::pow(r, d - 2) * std::sqrt(r * r + grad_r * grad_r);
}

SphereQuadrature banach_surface_quadrature(const Norm& space, int resolution) {
  SphereQuadrature euc = euclidean_sphere_grid(space.dim(), resolution);
  SphereQuadrature q;
  q.resolution = resolution;
  q.points.resize(space.dim(), euc.size());
  q.weights.resize(euc.size());
  for (int i = 0; i < euc.size(); ++i) {
    Vec u = euc.points.col(i);
    double g = space.gauge(u);
    if (!(g > 0.0)) throw std::invalid_argument("banach_surface_quadrature: degenerate gauge");
    Vec x = u / g;
    double jac = radial_rescale_jacobian(space, u);
    double rho = sphere_density(space, x);
    q.points.col(i) = x;
    q.weights[i] = euc.weights[i] * jac * rho;
  }
  return q;
}

double natural_mass(const Norm& space, int resolution) {
  return banach_surface_quadrature(space, resolution).total_mass();
}

SymmetrizedNorm symmetrize(const Norm& space, int resolution) {
  SphereQuadrature q = banach_surface_quadrature(space, resolution);
  SymmetrizedNorm out{space, Norm::from_atoms(q.points, q.weights), resolution};
  return out;
}

NaturalDirectionSampler::NaturalDirectionSampler(const Norm& space, std::uint64_t seed)
    : space_(&space), surface_area_(sphere_surface_area(space.dim())) {
  eng_ = block_engine(seed, 0);
}

NaturalDirectionSample NaturalDirectionSampler::draw() { return draw(eng_); }

NaturalDirectionSample NaturalDirectionSampler::draw(std::mt19937_64& eng) const {
  Vec u = uniform_sphere_point(space_->dim(), eng);
  double g = space_->gauge(u);
  Vec x = u / g;
  double w = surface_area_ * radial_rescale_jacobian(*space_, u) * sphere_density(*space_, x);
  return {x, w};
}

MonteCarloMass natural_measure_segment_mass(const Norm& space, const Vec& xi, long samples,
                                            std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("natural_measure_segment_mass: samples >= 2");
  NaturalDirectionSampler sampler(space, seed);
  // t-range covering every hyperplane that can meet [0, xi]: |<x, xi>| over
  // gauge(x) = 1 is the dual-ball support, bounded on a coarse sphere grid.
  double tmax = 0.0;
  {
    SphereQuadrature q = banach_surface_quadrature(space, space.dim() == 2 ? 256 : 2);
    for (int i = 0; i < q.size(); ++i)
      tmax = std::max(tmax, std::abs(q.points.col(i).dot(xi)));
    tmax *= 1.05;
  }
  std::mt19937_64 eng = block_engine(seed, 1);
  std::uniform_real_distribution<double> unif(-tmax, tmax);
  double sum = 0.0, sumsq = 0.0;
  for (long s = 0; s < samples; ++s) {
    NaturalDirectionSample d = sampler.draw(eng);
    double proj = d.x.dot(xi);
    double t = unif(eng);
    double hit = (t >= std::min(0.0, proj) && t <= std::max(0.0, proj)) ? 1.0 : 0.0;
    double v = 0.5 * d.weight * (2.0 * tmax) * hit;
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / samples;
  double var = (sumsq - sum * sum / samples) / (samples - 1.0);
  return {mean, std::sqrt(std::max(0.0, var) / samples), samples};
}

}  // namespace croftonlab
