#include "croftonlab/rng.hpp"

#include <cstdlib>
#include <string>

namespace croftonlab {

Eigen::VectorXd uniform_sphere_point(int dim, std::mt19937_64& eng) {
  std::normal_distribution<double> g01(0.0, 1.0);
  Eigen::VectorXd v(dim);
  double n2;
  do {
    for (int i = 0; i < dim; ++i) v[i] = g01(eng);
    n2 = v.squaredNorm();
  } while (n2 < 1e-24);
  return v / std::sqrt(n2);
}

double pairwise_sum(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  std::vector<double> level = xs;
  while (level.size() > 1) {
    std::vector<double> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level[0];
}

int worker_count() {
  const char* env = std::getenv("CROFTONLAB_WORKERS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

}  // namespace croftonlab
