#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace croftonlab {

/// splitmix64 step; used to derive independent per-block seeds from a
/// master seed so that results do not depend on the worker count.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d4a2395ab4e44cull;
  return z ^ (z >> 31);
}

inline std::mt19937_64 block_engine(std::uint64_t master_seed, std::uint64_t block) {
  std::uint64_t s = master_seed ^ (0x51ed2701a1b2c3d4ull * (block + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform point on the Euclidean unit sphere S^{dim-1}.
Eigen::VectorXd uniform_sphere_point(int dim, std::mt19937_64& eng);

/// Deterministic pairwise summation (binary tree over the input order).
double pairwise_sum(const std::vector<double>& xs);

/// Worker count: CROFTONLAB_WORKERS if set, else 1.
int worker_count();

}  // namespace croftonlab
