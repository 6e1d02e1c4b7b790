#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "croftonlab/roots.hpp"
#include "croftonlab/scenario.hpp"

namespace croftonlab {

/// One sampled system: per factor a unit coefficient vector and an offset,
/// with the combined importance weight.
struct SystemSample {
  std::vector<Vec> directions;
  Vec offsets;
  double weight = 0.0;
};

struct EstimateReport {
  double estimate = 0.0;
  double std_error = 0.0;
  long samples = 0;
  long uncertain_samples = 0;
  std::vector<std::array<double, 2>> t_ranges;  // per factor, over the chart grid
  double comparison = 0.0;  // mixed-volume side, when computed
  double z_score = 0.0;
};

/// Monte-Carlo average of weight * N_U over sampled systems.  Directions
/// come from the natural measure of each factor norm (theorem-2) or from
/// the factor Crofton measures (theorem-1; requires zonoid factors).
/// Offsets are uniform over the per-sample range of <x_i, theta_i> on the
/// chart grid, padded 1%.
EstimateReport estimate_average(const Scenario& scenario, long samples, std::uint64_t seed,
                                int workers = 0);

struct VerificationRecord {
  std::string scenario;
  std::string mode;
  double lhs = 0.0;
  double lhs_std_error = 0.0;
  double rhs = 0.0;
  double rhs_tolerance = 0.0;
  double z_score = 0.0;
  bool pass = false;
  long samples = 0;
  int grid = 0;
  std::uint64_t seed = 0;
};

/// LHS = estimate_average, RHS = (n!/2^n) * finsler_mixed_volume of the
/// B-body fields (symmetrized ones for theorem-2); pass at 3 sigma plus
/// the RHS quadrature tolerance.
VerificationRecord verify(const Scenario& scenario, long samples = 0, int grid = 0,
                          std::uint64_t seed = 0);

/// RHS only: (n!/2^n) * finsler_mixed_volume for the scenario.
double mixed_volume_side(const Scenario& scenario, int grid = 0, FinslerReport* rep = nullptr);

}  // namespace croftonlab
