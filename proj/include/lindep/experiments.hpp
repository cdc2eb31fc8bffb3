#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lindep/bds.hpp"
#include "lindep/lambda.hpp"

namespace lindep {

/// Residuals of a polynomial fit reordered by ascending x (ties by original
/// index). With an i.i.d. regressor the sample-order residuals are i.i.d.
/// regardless of the true relationship; ordering by the regressor turns
/// functional misfit into serial structure the BDS test can see.
std::vector<double> residuals_sorted_by_x(const PairedSample& sample, int fit_order);

struct CrossoverGrid {
  double a_start = 0.0;
  double a_step = 0.02;
  double a_max = 0.5;
  bool stop_at_crossover = true;  // stop once majority rejection is reached
};

struct CrossoverRow {
  double a = 0.0;
  double mean_lambda = 0.0;      // order-1 Lambda, averaged over seeds
  double mean_statistic = 0.0;   // BDS statistic on order-1 residuals
  double rejection_fraction = 0.0;  // fraction of seeds with p < 0.05
  int seeds = 0;
};

struct CrossoverResult {
  int order = 2;
  std::vector<CrossoverRow> rows;
  std::optional<double> crossover_a;          // smallest a with majority rejection
  std::optional<double> lambda_at_crossover;  // mean Lambda at that a
};

/// Sweeps the nonlinearity coefficient of the order-2/3 generator upward and
/// tabulates, per a and over the seed ensemble, the mean Lambda, the mean
/// BDS statistic, and the p < 0.05 rejection fraction.
CrossoverResult run_crossover(int order, const CrossoverGrid& grid, int seeds, std::size_t n,
                              const LambdaConfig& lambda_config, const BdsConfig& bds_config,
                              std::uint64_t seed_base = 1);

}  // namespace lindep
