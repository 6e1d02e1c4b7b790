#pragma once

#include "croftonlab/grassmann_density.hpp"
#include "croftonlab/norm.hpp"

namespace croftonlab {

/// T(f)(g) = integral over lines of |cos(angle)| f, where lines carry half
/// the Euclidean surface measure of the sphere (each line counted once).
/// With this normalization T(1) = 2 on S^1 and T(1) = pi on S^2.
double cosine_transform(const GrassmannDensity& f, const Vec& g);

struct InversionReport {
  double residual_sup = 0.0;  // sup |T(phi) - target| over the grid
  int degree = 0;             // highest harmonic degree used
};

/// Inverts the cosine transform by expansion in even circular harmonics
/// (dim 2) or even real spherical harmonics (dim 3), dividing by the
/// transform eigenvalues with a Tikhonov term `regularization`.
/// Throws non_convergence_error when the residual exceeds `residual_tol`.
GrassmannDensity invert_cosine_transform(const GrassmannDensity& target,
                                         double regularization,
                                         int max_degree = 0,  // 0: default per dim
                                         double residual_tol = 1e-2,
                                         InversionReport* report = nullptr);

/// Crofton density of the predual `space`: the density phi on lines of V*
/// with T(phi) equal to the dual norm restricted to the sphere of V*.
GrassmannDensity crofton_density_for(const Norm& space,
                                     double regularization = 1e-10,
                                     int max_degree = 0,
                                     InversionReport* report = nullptr);

struct ZonoidReport {
  bool is_zonoid = false;
  double min_density = 0.0;
  double mean_density = 0.0;
};

/// Positivity test of the Crofton density; tolerance -1e-4 * mean density
/// absorbs inversion noise.  The default regularization is heavier than
/// for density reconstruction: the verdict reads the sign of the damped
/// spectral density, so a few percent of unresolved tail is acceptable
/// and the inversion runs with a loose residual gate.
ZonoidReport zonoid_check(const Norm& space, double regularization = 1e-3,
                          int max_degree = 0);

/// Eigenvalue of the cosine transform on harmonics of degree l (degree 2k
/// circular harmonics in dim 2), computed numerically by transforming one
/// basis harmonic.
double cosine_eigenvalue(int dim, int l);

}  // namespace croftonlab
