#pragma once

#include <cstdint>
#include <vector>

#include "croftonlab/cosine.hpp"
#include "croftonlab/norm.hpp"

namespace croftonlab {

struct ProductCroftonResult {
  double estimate = 0.0;
  double std_error = 0.0;
  /// Density-product prediction; defined when every parallelotope edge
  /// lies in a single distinct factor, NaN otherwise.
  double predicted = 0.0;
  long samples = 0;
};

/// Monte-Carlo mass, under the product of the factor Crofton measures, of
/// the hyperplane tuples meeting the parallelotope spanned by `edges`
/// (n <= 2 edge vectors in the product of the dual spaces, concatenated).
/// Each predual must be a zonoid space (positive Crofton density), so the
/// sampling stays unsigned; otherwise unsupported_mode_error.
ProductCroftonResult product_crofton_density(const std::vector<Norm>& preduals,
                                             const std::vector<Vec>& edges,
                                             long samples, std::uint64_t seed);

}  // namespace croftonlab
