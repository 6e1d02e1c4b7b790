#pragma once

#include <functional>
#include <string>

#include "croftonlab/sphere_grid.hpp"

namespace croftonlab {

/// An even scalar field on the unit sphere, standing for a function on the
/// Grassmannian of lines.  Carries grid samples for export and an optional
/// smooth evaluator (harmonic synthesis or a closed form); evaluation
/// falls back to grid interpolation when no evaluator is present.
struct GrassmannDensity {
  int dim = 0;
  Mat directions;  // dim x N
  Vec values;
  std::function<double(const Vec&)> evaluator;

  double operator()(const Vec& direction) const;

  double min_value() const { return values.minCoeff(); }
  double mean_value() const { return values.mean(); }

  static GrassmannDensity from_function(int dim, const std::function<double(const Vec&)>& f,
                                        int resolution);
  static GrassmannDensity constant(int dim, double c, int resolution);

  /// CSV rows: direction components, value.
  void write_csv(const std::string& path) const;
};

}  // namespace croftonlab
