#pragma once

#include <vector>

#include "croftonlab/function_space.hpp"

namespace croftonlab {

/// Axis-aligned sub-domain of a chart.
struct Box {
  Vec lo, hi;
  double volume() const { return (hi - lo).prod(); }
};

struct FinslerReport {
  double value = 0.0;
  double coarse_value = 0.0;  // same integral at half the grid
  double refinement_delta = 0.0;
  int grid = 0;
};

/// Chart integral of the fiberwise mixed volume of the fields over U:
/// at each node the fiber bodies are expressed in an orthonormal coframe
/// of the dual metric and the Riemannian density weights the node.
/// The number of fields must equal the chart dimension.
double finsler_mixed_volume(const std::vector<BBodyField>& fields,
                            const ManifoldChart& chart, const Box& U, int grid,
                            FinslerReport* report = nullptr);

}  // namespace croftonlab
