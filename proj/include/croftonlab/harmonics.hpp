#pragma once

#include <Eigen/Dense>
#include <utility>

namespace croftonlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<Vec, Vec> gauss_legendre(int n);

/// Orthonormal real spherical harmonic Y_{l,m} on S^2, m in [-l, l];
/// theta is the polar angle from e_z, phi the azimuth.
double real_sph_harmonic(int l, int m, double theta, double phi);
double real_sph_harmonic(int l, int m, const Vec& x);

}  // namespace croftonlab
