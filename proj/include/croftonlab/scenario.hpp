#pragma once

#include <optional>
#include <string>
#include <vector>

#include "croftonlab/finsler.hpp"
#include "croftonlab/function_space.hpp"

namespace croftonlab {

enum class Mode { Theorem1, Theorem2 };

struct FactorSpec {
  std::string family = "trig";  // trig | monomial
  int coord = 0;
  std::vector<int> orders = {1};  // frequencies or degrees
  std::string norm_spec = "euclidean:2";
};

struct Scenario {
  std::string name;
  ManifoldChart chart;
  std::vector<FactorSpec> factors;
  Mode mode = Mode::Theorem2;
  Box U;
  long samples = 100000;
  int grid = 1000;            // chart-integral grid
  int root_grid = 0;          // 0: CountOptions default
  std::uint64_t seed = 1;
  int symmetrize_resolution = 2048;
  double rhs_rel_tol = 5e-3;

  std::vector<FunctionSpaceOnX> build_spaces() const;
};

/// "euclidean:<dim>", "lp:<p>:<dim>", "linf:<dim>" (support-sampled cube
/// gauge, dim 2 only), "linf-smooth:<dim>" (Minkowski-smoothed cube),
/// "support:<csv path>".
Norm parse_norm_spec(const std::string& spec);

/// Gauge grid of the Minkowski-smoothed unit cube (1-s)*B_inf + s*B_2.
Norm smoothed_linf_norm(int dim, double smoothing = 0.15, int grid = 512);

const std::vector<std::string>& builtin_scenario_names();
Scenario builtin_scenario(const std::string& name);

/// Parses the table-structured scenario config ([section] / key = value).
/// Throws std::invalid_argument with a line reference on parse errors.
Scenario load_scenario_config(const std::string& path);

}  // namespace croftonlab
