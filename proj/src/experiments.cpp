#include "lindep/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lindep/datagen.hpp"
#include "lindep/stats.hpp"

namespace lindep {

std::vector<double> residuals_sorted_by_x(const PairedSample& sample, int fit_order) {
  const RegressionFit fit = fit_polynomial(sample, fit_order);
  const std::size_t n = sample.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sample.x[a] < sample.x[b] || (sample.x[a] == sample.x[b] && a < b);
  });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = fit.residuals[order[i]];
  return sorted;
}

CrossoverResult run_crossover(int order, const CrossoverGrid& grid, int seeds, std::size_t n,
                              const LambdaConfig& lambda_config, const BdsConfig& bds_config,
                              std::uint64_t seed_base) {
  if (seeds < 1) {
    throw InvalidParameter("run_crossover: need at least one seed");
  }
  if (!(grid.a_step > 0.0) || grid.a_max < grid.a_start) {
    throw InvalidParameter("run_crossover: malformed grid");
  }

  CrossoverResult result;
  result.order = order;

  const int steps = static_cast<int>(std::floor((grid.a_max - grid.a_start) / grid.a_step + 1e-9));
  for (int step = 0; step <= steps; ++step) {
    const double a = grid.a_start + grid.a_step * step;
    CrossoverRow row;
    row.a = a;
    row.seeds = seeds;
    double lambda_sum = 0.0;
    int lambda_count = 0;
    double stat_sum = 0.0;
    int rejections = 0;
    for (int s = 0; s < seeds; ++s) {
      const PairedSample sample = gen_polynomial(a, order, n, seed_base + static_cast<std::uint64_t>(s));
      const LambdaReport report = compute_lambda(sample, lambda_config);
      if (!report.degenerate) {
        lambda_sum += report.lambda;
        ++lambda_count;
      }
      const std::vector<double> z = residuals_sorted_by_x(sample, 1);
      const BdsResult bds = bds_statistic(z, bds_config);
      stat_sum += bds.statistic;
      rejections += bds.p_value < 0.05;
    }
    row.mean_lambda = lambda_count > 0 ? lambda_sum / lambda_count
                                       : std::numeric_limits<double>::quiet_NaN();
    row.mean_statistic = stat_sum / seeds;
    row.rejection_fraction = static_cast<double>(rejections) / seeds;
    result.rows.push_back(row);

    if (!result.crossover_a && row.rejection_fraction > 0.5) {
      result.crossover_a = a;
      result.lambda_at_crossover = row.mean_lambda;
      if (grid.stop_at_crossover) break;
    }
  }
  return result;
}

}  // namespace lindep
