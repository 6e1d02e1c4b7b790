#pragma once

#include <vector>

#include "croftonlab/finsler.hpp"
#include "croftonlab/function_space.hpp"

namespace croftonlab {

struct CountOptions {
  int grid_1d = 4096;
  int grid_2d = 256;
  double merge_radius_rel = 1e-6;  // times the domain diameter
};

/// Counts the isolated solutions in U of the system
///   <c_i, theta_i(x)> = t_i,   i = 1..n,
/// n = chart dimension in {1, 2}.  One dimension: sign-change scan plus
/// bisection; two dimensions: cell subdivision with Newton polishing and
/// root deduplication.  Precomputes the basis values on the scan grid so
/// that repeated counts over many sampled systems stay cheap.
class SolutionCounter {
public:
  SolutionCounter(std::vector<FunctionSpaceOnX> spaces, ManifoldChart chart, Box U,
                  CountOptions opts = {});

  /// Returns the root count; sets *uncertain when Newton persistently
  /// failed in some flagged cell.
  int count(const std::vector<Vec>& coefficients, const Vec& offsets,
            bool* uncertain = nullptr) const;

  /// Values of theta_i over the scan grid (grid size x dim_i); used by the
  /// sampler to derive offset ranges.
  const Mat& theta_grid(int factor) const { return theta_grids_[factor]; }
  const ManifoldChart& chart() const { return chart_; }
  const Box& domain() const { return U_; }
  const std::vector<FunctionSpaceOnX>& spaces() const { return spaces_; }

private:
  int count_1d(const Vec& c, double t, bool* uncertain) const;
  int count_2d(const std::vector<Vec>& c, const Vec& t, bool* uncertain) const;

  std::vector<FunctionSpaceOnX> spaces_;
  ManifoldChart chart_;
  Box U_;
  CountOptions opts_;
  std::vector<Mat> theta_grids_;  // per factor, (#nodes) x dim_i
  Mat nodes_;                     // n x #nodes scan nodes
  int m1_ = 0;                    // 1d cells
  int m2_ = 0;                    // 2d cells per side
};

}  // namespace croftonlab
