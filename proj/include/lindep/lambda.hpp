#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lindep/info.hpp"
#include "lindep/types.hpp"

namespace lindep {

struct LambdaConfig {
  std::optional<int> bins;      // unset: default_bin_count(N)
  int model_order = 1;          // polynomial degree of the fitted model
  bool correction = true;       // Miller-Madow on the three entropy terms
  double mm_divisor = kMillerMadowDivisor;
  double min_information = 0.01;  // nats; I below this makes Lambda meaningless
  bool symmetric = false;         // also fit x on y and report the smaller Lambda
};

struct LambdaReport {
  double rho = 0.0;
  double i_xy = 0.0;        // nats
  double i_xyprime = 0.0;   // nats
  double lambda = std::numeric_limits<double>::quiet_NaN();  // NaN when degenerate
  double rho_x_yprime = 0.0;  // diagnostic: residual linear correlation after the transform
  int order = 1;
  int bins = 0;
  bool correction = true;
  bool degenerate = false;  // i_xy below the threshold; lambda undefined
  bool clamped = false;     // raw 1 - I'/I fell outside [0, 1]
  std::vector<std::string> warnings;
};

/// min(50, max(5, floor(sqrt(n)/2))); gives 50 bins at n = 10,000.
int default_bin_count(std::size_t n);

/// Maps the residuals onto the marginal of y by rank: the value of z with
/// rank r becomes the r-th order statistic of y (z ties broken by original
/// index). The result is a permutation of y's values, so any marginal
/// histogram of the output is identical to y's.
std::vector<double> quantile_transform(std::span<const double> y, std::span<const double> z);

/// The four-step procedure: fit, measure I(X,Y), map residuals onto y's
/// marginal, measure I(X,Y'), report Lambda = 1 - I'/I clamped to [0,1].
/// X is discretized once and the same labels are reused for both
/// measurements, so the difference is carried entirely by the joint term.
LambdaReport compute_lambda(const PairedSample& sample, const LambdaConfig& config = {});

/// One report per fit order 1..max_order (max_order <= 6) on a shared
/// binning configuration.
std::vector<LambdaReport> lambda_profile(const PairedSample& sample, const LambdaConfig& config,
                                         int max_order);

}  // namespace lindep
