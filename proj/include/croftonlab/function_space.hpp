#pragma once

#include <functional>
#include <string>
#include <vector>

#include "croftonlab/banach.hpp"
#include "croftonlab/norm.hpp"

namespace croftonlab {

/// A parametric chart: a product of intervals, each coordinate either
/// periodic (circle factor) or a plain interval, with an optional
/// Riemannian metric (defaults to identity).
struct ManifoldChart {
  int n = 1;
  Vec lo, hi;
  std::vector<bool> periodic;
  std::function<Mat(const Vec&)> metric;  // n x n SPD; empty => identity

  Mat metric_at(const Vec& x) const;
  bool contains(const Vec& x) const;
  double diameter() const;
  /// Shortest displacement from a to b respecting periodic coordinates.
  Vec displacement(const Vec& a, const Vec& b) const;

  static ManifoldChart circle();           // [0, 2*pi), periodic
  static ManifoldChart interval(double a, double b);
  static ManifoldChart torus();            // [0, 2*pi)^2, periodic
  static ManifoldChart box(const Vec& lo, const Vec& hi);
};

/// One basis function with an exact analytic gradient.
struct BasisFunction {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  std::string name;
};

/// cos(k t_c), sin(k t_c) pairs for each listed frequency, as functions of
/// chart coordinate `coord` on an n-dimensional chart.
std::vector<BasisFunction> trig_basis(int coord, const std::vector<int>& frequencies, int n);
/// Monomials t_c^d for the listed degrees.
std::vector<BasisFunction> monomial_basis(int coord, const std::vector<int>& degrees, int n);

/// A finite-dimensional space of smooth functions on the chart together
/// with a norm on its coefficient space.
class FunctionSpaceOnX {
public:
  FunctionSpaceOnX(std::vector<BasisFunction> basis, Norm norm, const ManifoldChart& chart);

  int dim() const { return static_cast<int>(basis_.size()); }
  const Norm& norm() const { return norm_; }
  const std::vector<BasisFunction>& basis() const { return basis_; }

  /// theta_V(x) = (f_1(x), ..., f_d(x)) as a point of V*.
  Vec theta(const Vec& x) const;
  /// Rows are the gradients of the basis functions at x (d x n).
  Mat theta_jacobian(const Vec& x) const;

  /// Support function of the pullback body at x: the dual norm of the
  /// coefficient covector f_j -> grad f_j(x) . xi.
  double pullback_support(const Vec& x, const Vec& xi) const;

  FunctionSpaceOnX with_norm(Norm norm) const;

private:
  std::vector<BasisFunction> basis_;
  Norm norm_;
};

/// The B-body field of a function space: x -> support function of the
/// fiber body in T_x*.  For symmetrized runs the coefficient norm is
/// replaced by its zonoid symmetrization first.
class BBodyField {
public:
  explicit BBodyField(FunctionSpaceOnX space) : space_(std::move(space)) {}

  double support(const Vec& x, const Vec& xi) const {
    return space_.pullback_support(x, xi);
  }
  /// support(x, .) over the columns of `xis`.
  Vec support_many(const Vec& x, const Mat& xis) const;

  const FunctionSpaceOnX& space() const { return space_; }

private:
  FunctionSpaceOnX space_;
};

BBodyField bbody_field(const FunctionSpaceOnX& space);
/// Field with the coefficient norm replaced by its zonoid symmetrization.
BBodyField bbody_field_symmetrized(const FunctionSpaceOnX& space, int resolution);

}  // namespace croftonlab
