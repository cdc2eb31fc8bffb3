#include "lindep/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lindep/stats.hpp"

namespace lindep {

int default_bin_count(std::size_t n) {
  const int rule = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)) / 2.0));
  return std::min(50, std::max(5, rule));
}

std::vector<double> quantile_transform(std::span<const double> y, std::span<const double> z) {
  if (y.size() != z.size()) {
    throw LengthMismatch("quantile_transform: lengths " + std::to_string(y.size()) + " vs " +
                         std::to_string(z.size()));
  }
  require_finite(y, "quantile_transform y");
  require_finite(z, "quantile_transform z");

  const std::size_t n = y.size();
  std::vector<double> sorted_y(y.begin(), y.end());
  std::sort(sorted_y.begin(), sorted_y.end());

  std::vector<std::size_t> zorder(n);
  std::iota(zorder.begin(), zorder.end(), std::size_t{0});
  std::sort(zorder.begin(), zorder.end(), [&](std::size_t a, std::size_t b) {
    return z[a] < z[b] || (z[a] == z[b] && a < b);
  });

  std::vector<double> out(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    out[zorder[rank]] = sorted_y[rank];
  }
  return out;
}

namespace {

LambdaReport lambda_one_direction(const Series& x, const Series& y, const DiscretizedSeries& dx,
                                  double i_xy, const LambdaConfig& config, int bins,
                                  std::vector<std::string> warnings) {
  LambdaReport report;
  report.order = config.model_order;
  report.bins = bins;
  report.correction = config.correction;
  report.warnings = std::move(warnings);
  report.rho = pearson(x, y);
  report.i_xy = i_xy;

  const RegressionFit fit = fit_polynomial(PairedSample(x, y), config.model_order);

  if (i_xy < config.min_information) {
    report.degenerate = true;  // lambda stays NaN: the ratio is meaningless
    return report;
  }

  // Residual spread at rounding-noise level means the model reproduces y
  // exactly; the leftover bits carry arithmetic artifacts, not dependence,
  // and rank-transforming them would manufacture spurious information.
  if (sample_stddev(fit.residuals) <= 1e-10 * sample_stddev(y)) {
    report.i_xyprime = 0.0;
    report.rho_x_yprime = 0.0;
    report.lambda = 1.0;
    report.warnings.push_back("residuals are at numerical noise level; exact fit assumed");
    return report;
  }

  const std::vector<double> yprime = quantile_transform(y, fit.residuals);
  const DiscretizedSeries dyp = equal_frequency_bins(yprime, bins);
  report.i_xyprime = mutual_information(dx, dyp, config.correction, config.mm_divisor);
  report.rho_x_yprime = pearson(x, yprime);

  const double raw = 1.0 - report.i_xyprime / i_xy;
  report.clamped = raw < 0.0 || raw > 1.0;
  report.lambda = std::clamp(raw, 0.0, 1.0);
  return report;
}

}  // namespace

LambdaReport compute_lambda(const PairedSample& sample, const LambdaConfig& config) {
  if (config.model_order < 1) {
    throw InvalidParameter("compute_lambda: model_order must be >= 1");
  }
  if (config.bins && *config.bins < 2) {
    throw InvalidParameter("compute_lambda: bins must be >= 2");
  }
  if (!(config.min_information >= 0.0)) {
    throw InvalidParameter("compute_lambda: min_information must be >= 0");
  }

  const std::size_t n = sample.size();
  const int bins = config.bins ? *config.bins : default_bin_count(n);
  if (n < static_cast<std::size_t>(bins)) {
    throw TooFewPoints("compute_lambda: " + std::to_string(n) + " observations for " +
                       std::to_string(bins) + " bins");
  }
  std::vector<std::string> warnings;
  if (n < static_cast<std::size_t>(10) * bins) {
    warnings.push_back("sample size " + std::to_string(n) + " is below the recommended 10*bins = " +
                       std::to_string(10 * bins));
  }

  const DiscretizedSeries dx = equal_frequency_bins(sample.x, bins);
  const DiscretizedSeries dy = equal_frequency_bins(sample.y, bins);
  const double i_xy = mutual_information(dx, dy, config.correction, config.mm_divisor);

  LambdaReport report = lambda_one_direction(sample.x, sample.y, dx, i_xy, config, bins, warnings);
  if (config.symmetric) {
    LambdaReport reverse =
        lambda_one_direction(sample.y, sample.x, dy, i_xy, config, bins, warnings);
    // I(X,Y) is symmetric, so degeneracy coincides; keep the smaller lambda.
    if (!report.degenerate && reverse.lambda < report.lambda) {
      reverse.rho = report.rho;  // pearson is symmetric; keep the x,y orientation
      report = reverse;
    }
  }
  return report;
}

std::vector<LambdaReport> lambda_profile(const PairedSample& sample, const LambdaConfig& config,
                                         int max_order) {
  if (max_order < 1 || max_order > 6) {
    throw InvalidParameter("lambda_profile: max_order must be in [1, 6]");
  }
  LambdaConfig per_order = config;
  if (!per_order.bins) {
    per_order.bins = default_bin_count(sample.size());  // shared binning across orders
  }
  std::vector<LambdaReport> reports;
  reports.reserve(max_order);
  for (int k = 1; k <= max_order; ++k) {
    per_order.model_order = k;
    reports.push_back(compute_lambda(sample, per_order));
  }
  return reports;
}

}  // namespace lindep
