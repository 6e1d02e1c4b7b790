#include "croftonlab/finsler.hpp"

#include <cmath>
#include <vector>

#include "croftonlab/rng.hpp"
#include "croftonlab/support_body.hpp"

namespace croftonlab {

namespace {

double integrate_at_grid(const std::vector<BBodyField>& fields, const ManifoldChart& chart,
                         const Box& U, int grid) {
  int n = chart.n;
  std::vector<double> cells;
  if (n == 1) {
    double a = U.lo[0], b = U.hi[0];
    double hstep = (b - a) / grid;
    cells.reserve(grid);
    for (int i = 0; i < grid; ++i) {
      Vec x(1);
      x[0] = a + (i + 0.5) * hstep;
      Mat G = chart.metric_at(x);
      double lmt = std::sqrt(G(0, 0));  // chol in 1d
      // Coframe transform: evaluate the support at L^-T xi'.
      Mat dirs(1, 2);
      dirs << 1.0 / lmt, -1.0 / lmt;
      Vec hv = fields[0].support_many(x, dirs);
      double v = std::max(0.0, hv[0] + hv[1]);
      cells.push_back(v * std::sqrt(G.determinant()) * hstep);
    }
    return pairwise_sum(cells);
  }
  // n == 2
  int g0 = grid, g1 = grid;
  double h0 = (U.hi[0] - U.lo[0]) / g0;
  double h1 = (U.hi[1] - U.lo[1]) / g1;
  cells.reserve(static_cast<std::size_t>(g0) * g1);
  const int n_dirs = 256;
  for (int i = 0; i < g0; ++i) {
    for (int j = 0; j < g1; ++j) {
      Vec x(2);
      x[0] = U.lo[0] + (i + 0.5) * h0;
      x[1] = U.lo[1] + (j + 0.5) * h1;
      Mat G = chart.metric_at(x);
      Eigen::LLT<Mat> llt(G);
      Mat L = llt.matrixL();
      Mat Linv_t = L.transpose().inverse();
      std::vector<SupportFn> bodies;
      for (const auto& f : fields) {
        const BBodyField* fp = &f;
        Vec xcopy = x;
        Mat M = Linv_t;
        bodies.push_back([fp, xcopy, M](const Mat& dirs) {
          return fp->support_many(xcopy, M * dirs);
        });
      }
      double v = mixed_volume(bodies, n_dirs);
      cells.push_back(v * std::sqrt(G.determinant()) * h0 * h1);
    }
  }
  return pairwise_sum(cells);
}

}  // namespace

double finsler_mixed_volume(const std::vector<BBodyField>& fields, const ManifoldChart& chart,
                            const Box& U, int grid, FinslerReport* report) {
  if (static_cast<int>(fields.size()) != chart.n)
    throw std::invalid_argument("finsler_mixed_volume: one field per chart dimension");
  if (grid < 2) throw std::invalid_argument("finsler_mixed_volume: grid >= 2");
  double fine = integrate_at_grid(fields, chart, U, grid);
  if (report) {
    double coarse = integrate_at_grid(fields, chart, U, std::max(2, grid / 2));
    report->value = fine;
    report->coarse_value = coarse;
    report->refinement_delta = std::abs(fine - coarse);
    report->grid = grid;
  }
  return fine;
}

}  // namespace croftonlab
