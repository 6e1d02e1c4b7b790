#include "croftonlab/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "croftonlab/banach.hpp"
#include "croftonlab/cosine.hpp"
#include "croftonlab/rng.hpp"

namespace croftonlab {

namespace {

constexpr long kBlockSize = 4096;

struct BlockResult {
  double sum = 0.0;
  double sum_sq = 0.0;
  long uncertain = 0;
  std::vector<std::array<double, 2>> ranges;  // per-factor envelope
};

}  // namespace

EstimateReport estimate_average(const Scenario& scenario, long samples, std::uint64_t seed,
                                int workers) {
  if (samples <= 0) samples = scenario.samples;
  if (seed == 0) seed = scenario.seed;
  if (workers <= 0) workers = worker_count();

  std::vector<FunctionSpaceOnX> spaces = scenario.build_spaces();
  const int n = scenario.chart.n;

  CountOptions opts;
  if (scenario.root_grid > 0) {
    opts.grid_1d = scenario.root_grid;
    opts.grid_2d = scenario.root_grid;
  }
  SolutionCounter counter(spaces, scenario.chart, scenario.U, opts);

  // Per-factor sampling state.
  std::vector<NaturalDirectionSampler> natural;
  std::vector<GrassmannDensity> crofton;
  std::vector<double> sphere_area(n);
  for (int i = 0; i < n; ++i) {
    const Norm& nm = spaces[i].norm();
    sphere_area[i] = sphere_surface_area(nm.dim());
    if (scenario.mode == Mode::Theorem2) {
      natural.emplace_back(nm, seed);
    } else {
      GrassmannDensity phi = crofton_density_for(nm);
      double mean = phi.values.mean();
      if (phi.values.minCoeff() < -1e-4 * std::abs(mean))
        throw unsupported_mode_error("factor " + std::to_string(i) +
                                     ": coefficient norm is not a zonoid; its Crofton "
                                     "density takes negative values");
      crofton.push_back(std::move(phi));
    }
  }

  const long n_blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockResult> blocks(n_blocks);

  auto run_block = [&](long b) {
    std::mt19937_64 eng = block_engine(seed, static_cast<std::uint64_t>(b));
    BlockResult r;
    r.ranges.assign(n, {std::numeric_limits<double>::infinity(),
                        -std::numeric_limits<double>::infinity()});
    long lo = b * kBlockSize;
    long hi = std::min(samples, lo + kBlockSize);
    std::vector<double> ys;
    ys.reserve(hi - lo);
    std::vector<Vec> dirs(n);
    Vec offsets(n);
    for (long s = lo; s < hi; ++s) {
      double w = 1.0;
      for (int i = 0; i < n; ++i) {
        if (scenario.mode == Mode::Theorem2) {
          NaturalDirectionSample d = natural[i].draw(eng);
          dirs[i] = d.x;
          w *= 0.5 * d.weight;
        } else {
          dirs[i] = uniform_sphere_point(spaces[i].norm().dim(), eng);
          w *= 0.5 * crofton[i](dirs[i]) * sphere_area[i];
        }
        // Per-sample offset range from theta over the scan grid, padded 1%.
        Vec g = counter.theta_grid(i) * dirs[i];
        double glo = g.minCoeff(), ghi = g.maxCoeff();
        double pad = 0.01 * (ghi - glo);
        glo -= pad;
        ghi += pad;
        r.ranges[i][0] = std::min(r.ranges[i][0], glo);
        r.ranges[i][1] = std::max(r.ranges[i][1], ghi);
        std::uniform_real_distribution<double> ud(glo, ghi);
        offsets[i] = ud(eng);
        w *= ghi - glo;
      }
      bool unc = false;
      int N = counter.count(dirs, offsets, &unc);
      if (unc) ++r.uncertain;
      ys.push_back(w * N);
    }
    r.sum = pairwise_sum(ys);
    for (double& y : ys) y *= y;
    r.sum_sq = pairwise_sum(ys);
    blocks[b] = std::move(r);
  };

  if (workers <= 1) {
    for (long b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (long b = w; b < n_blocks; b += workers) run_block(b);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<double> sums(n_blocks), sqs(n_blocks);
  EstimateReport rep;
  rep.samples = samples;
  rep.t_ranges.assign(n, {std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity()});
  for (long b = 0; b < n_blocks; ++b) {
    sums[b] = blocks[b].sum;
    sqs[b] = blocks[b].sum_sq;
    rep.uncertain_samples += blocks[b].uncertain;
    for (int i = 0; i < n; ++i) {
      rep.t_ranges[i][0] = std::min(rep.t_ranges[i][0], blocks[b].ranges[i][0]);
      rep.t_ranges[i][1] = std::max(rep.t_ranges[i][1], blocks[b].ranges[i][1]);
    }
  }
  double mean = pairwise_sum(sums) / samples;
  double mean_sq = pairwise_sum(sqs) / samples;
  rep.estimate = mean;
  rep.std_error = std::sqrt(std::max(0.0, mean_sq - mean * mean) / samples);
  return rep;
}

double mixed_volume_side(const Scenario& scenario, int grid, FinslerReport* rep) {
  if (grid <= 0) grid = scenario.grid;
  std::vector<FunctionSpaceOnX> spaces = scenario.build_spaces();
  std::vector<BBodyField> fields;
  for (const auto& sp : spaces) {
    if (scenario.mode == Mode::Theorem2)
      fields.push_back(bbody_field_symmetrized(sp, scenario.symmetrize_resolution));
    else
      fields.push_back(bbody_field(sp));
  }
  const int n = scenario.chart.n;
  double factor = 1.0;  // n! / 2^n
  for (int i = 1; i <= n; ++i) factor *= i;
  factor /= std::pow(2.0, n);
  return factor * finsler_mixed_volume(fields, scenario.chart, scenario.U, grid, rep);
}

VerificationRecord verify(const Scenario& scenario, long samples, int grid,
                          std::uint64_t seed) {
  if (samples <= 0) samples = scenario.samples;
  if (grid <= 0) grid = scenario.grid;
  if (seed == 0) seed = scenario.seed;

  EstimateReport lhs = estimate_average(scenario, samples, seed);
  FinslerReport fr;
  double rhs = mixed_volume_side(scenario, grid, &fr);

  VerificationRecord rec;
  rec.scenario = scenario.name;
  rec.mode = scenario.mode == Mode::Theorem1 ? "theorem-1" : "theorem-2";
  rec.lhs = lhs.estimate;
  rec.lhs_std_error = lhs.std_error;
  rec.rhs = rhs;
  rec.rhs_tolerance =
      std::max(scenario.rhs_rel_tol * std::abs(rhs), fr.refinement_delta);
  rec.z_score = lhs.std_error > 0.0 ? (lhs.estimate - rhs) / lhs.std_error : 0.0;
  rec.pass = std::abs(lhs.estimate - rhs) <= 3.0 * lhs.std_error + rec.rhs_tolerance;
  rec.samples = samples;
  rec.grid = grid;
  rec.seed = seed;
  return rec;
}

}  // namespace croftonlab
