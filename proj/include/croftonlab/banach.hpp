#pragma once

#include <cstdint>
#include <random>

#include "croftonlab/norm.hpp"
#include "croftonlab/sphere_grid.hpp"

namespace croftonlab {

/// Density of the Banach volume measure on the unit sphere of `space` at a
/// point x with gauge(x) = 1, relative to the Euclidean surface measure:
/// 1 / leb(B_x), where B_x is the unit ball of the restricted norm in the
/// tangent space of the sphere at x.
double sphere_density(const Norm& space, const Vec& x);

/// Area distortion of the radial map u -> u/gauge(u) from the Euclidean
/// unit sphere onto the unit sphere of `space`, at Euclidean unit u.
double radial_rescale_jacobian(const Norm& space, const Vec& u);

/// Quadrature for the Banach volume density on the unit sphere of `space`:
/// points on the gauge-1 sphere, weights carrying both the surface-measure
/// Jacobian of the radial rescaling and the tangent-ball density.
SphereQuadrature banach_surface_quadrature(const Norm& space, int resolution);

/// Total mass of the Banach volume density on the unit sphere.
double natural_mass(const Norm& space, int resolution);

/// Result of zonoid symmetrization: h is a support function (even,
/// sublinear, positive off 0) evaluated exactly as a finite zonotope sum
/// over the surface quadrature; `norm` is the symmetrized Banach space
/// (its dual norm is h).
struct SymmetrizedNorm {
  Norm base;
  Norm norm;  // kind Atomic; dual() == h
  int resolution = 0;
  double h(const Vec& y) const { return norm.dual(y); }
  Vec h_many(const Mat& ys) const { return norm.dual_many(ys); }
};

SymmetrizedNorm symmetrize(const Norm& space, int resolution);

/// One direction draw for the natural hyperplane measure: x on the unit
/// sphere of `space`, with importance weight such that
/// E[weight * f(x)] = integral of f over the sphere against the Banach
/// volume density.
struct NaturalDirectionSample {
  Vec x;
  double weight;
};

class NaturalDirectionSampler {
public:
  NaturalDirectionSampler(const Norm& space, std::uint64_t seed);
  NaturalDirectionSample draw();
  /// Draw with an externally owned engine (for per-worker streams).
  NaturalDirectionSample draw(std::mt19937_64& eng) const;

private:
  const Norm* space_;
  double surface_area_;
  std::mt19937_64 eng_;
};

/// Monte-Carlo mass, under the natural measure of `space`, of the set of
/// hyperplanes in V* crossing the segment [0, xi].  Converges to
/// h_symm(xi).
struct MonteCarloMass {
  double estimate;
  double std_error;
  long samples;
};
MonteCarloMass natural_measure_segment_mass(const Norm& space, const Vec& xi,
                                            long samples, std::uint64_t seed);

}  // namespace croftonlab
