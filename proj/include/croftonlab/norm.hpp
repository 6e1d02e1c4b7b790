#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

namespace croftonlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class NormKind { Euclidean, Lp, SupportSampled, Zonotope, Atomic };

/// A finite-dimensional norm (2 <= dim <= 4) given by its gauge, with the
/// dual norm available in closed form where the kind allows it and by grid
/// maximization otherwise.
///
/// Kinds:
///  - Euclidean: gauge(v) = sqrt(v'Av) for a positive definite A.
///  - Lp: the l_p norm, p in (1, inf).
///  - SupportSampled: dim-2 gauge values on a uniform angular grid,
///    evaluated by periodic cubic interpolation and 1-homogeneous extension.
///  - Zonotope: unit ball is a zonotope Minkowski-smoothed by a small
///    Euclidean ball; the dual norm is closed form, the gauge is recovered
///    by maximization over a direction grid.
///  - Atomic: the dual norm is a finite zonotope support function
///    0.5 * sum_i w_i |<x_i, xi>|; produced by zonoid symmetrization.
class Norm {
public:
  static Norm euclidean(int dim);
  static Norm euclidean(const Mat& quadratic_form);
  static Norm lp(double p, int dim);
  static Norm support_sampled(const Vec& gauge_values);
  static Norm support_sampled_from_gauge(const std::function<double(const Vec&)>& gauge,
                                         int grid);
  static Norm zonotope(const Mat& generators, double smoothing);
  static Norm from_atoms(const Mat& atoms, const Vec& weights);

  int dim() const { return dim_; }
  NormKind kind() const { return kind_; }

  double gauge(const Vec& v) const;
  /// Gradient of the gauge; analytic for Euclidean/Lp, central differences
  /// for the sampled kinds.
  Vec gauge_gradient(const Vec& v) const;

  /// sup{<xi, v> : gauge(v) <= 1}.
  double dual(const Vec& xi) const;
  /// dual() over the columns of `xis`, vectorized.
  Vec dual_many(const Mat& xis) const;

  double lp_exponent() const { return p_; }
  const Mat& atoms() const { return atoms_; }
  const Vec& atom_weights() const { return atom_w_; }
  const Vec& sampled_values() const { return values_; }

private:
  Norm() = default;
  void build_dual_ball_grid(int count);
  void validate() const;
  double interp_gauge_on_circle(double theta) const;

  NormKind kind_ = NormKind::Euclidean;
  int dim_ = 0;
  Mat form_;       // Euclidean: A
  Mat form_inv_;   // Euclidean: A^-1
  double p_ = 2.0;
  Vec values_;     // SupportSampled: gauge on uniform angles
  Mat boundary_;   // SupportSampled: points on the unit sphere of the norm
  Mat gens_;       // Zonotope generators (dim x k)
  double smoothing_ = 0.0;
  Mat atoms_;      // Atomic: dim x N sphere points
  Vec atom_w_;     // Atomic: weights
  Mat dual_grid_;      // direction grid for grid-max gauge
  Vec dual_grid_vals_; // dual() on that grid
};

struct invalid_body_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct non_convergence_error : std::runtime_error {
  double residual;
  non_convergence_error(const std::string& what, double res)
      : std::runtime_error(what), residual(res) {}
};
struct unsupported_mode_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace croftonlab
