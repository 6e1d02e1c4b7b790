#pragma once

#include <Eigen/Dense>

namespace croftonlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Quadrature nodes on a unit sphere (Euclidean or Banach), antipodally
/// closed with equal weights on antipodal pairs.
struct SphereQuadrature {
  Mat points;   // dim x N, columns are unit points
  Vec weights;  // strictly positive
  int resolution = 0;

  int dim() const { return static_cast<int>(points.rows()); }
  int size() const { return static_cast<int>(points.cols()); }
  double total_mass() const { return weights.sum(); }
};

/// Uniform angular grid on S^1; `n` must be even so the grid is closed
/// under x -> -x.
SphereQuadrature circle_grid(int n);

/// Subdivided icosahedral grid on S^2 with per-vertex spherical-area
/// weights.  Level 0 is the icosahedron (12 vertices); each level
/// quadruples the triangle count.
SphereQuadrature icosphere_grid(int level);

/// Product angular grid on S^3 (midpoint rule in all three angles).
SphereQuadrature s3_product_grid(int n);

/// Dispatch on dimension: circle_grid(resolution), icosphere_grid(level
/// from resolution), s3_product_grid(resolution).
SphereQuadrature euclidean_sphere_grid(int dim, int resolution);

/// Surface area of the Euclidean unit sphere S^{dim-1}.
double sphere_surface_area(int dim);

}  // namespace croftonlab
