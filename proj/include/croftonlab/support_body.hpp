#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace croftonlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Support function evaluated on a batch of directions (columns of an
/// m x K matrix of unit vectors).
using SupportFn = std::function<Vec(const Mat&)>;

SupportFn support_of_norm_dual(const class Norm& norm);

/// Lebesgue volume of the convex body {y : <u,y> <= h(u) for all u}, for
/// m in {1,2,3}, by radial integration of the circumscribed polytope over
/// a direction grid; the grid is doubled until the relative change drops
/// below 1e-3.  Throws invalid_body_error when h fails sublinearity
/// (empty or unbounded intersection detected on the grid).
/// `directions` pins the grid (angle count for m=2, icosphere level for
/// m=3) and disables refinement; 0 selects the refining defaults.
double body_volume(const SupportFn& h, int m, int directions = 0);

/// Mixed volume of m bodies in dimension m by polarization of the volume
/// polynomial; Minkowski sums realized by adding support functions.
double mixed_volume(const std::vector<SupportFn>& bodies, int directions = 0);

}  // namespace croftonlab
