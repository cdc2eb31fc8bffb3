#pragma once

#include <span>
#include <vector>

#include "lindep/types.hpp"

namespace lindep {

double mean(std::span<const double> s);

/// Unbiased sample variance (N-1 denominator). Requires N >= 2.
double sample_variance(std::span<const double> s);

double sample_stddev(std::span<const double> s);

/// (1/(N-1)) * sum (x_i - mean_x)(y_i - mean_y). Requires equal lengths, N >= 2.
double covariance(std::span<const double> x, std::span<const double> y);

/// Product-moment correlation, clamped to [-1, 1] against rounding drift.
/// Throws ConstantSeries when either argument has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// 1-based ranks with ties replaced by midranks.
std::vector<double> midranks(std::span<const double> s);

/// Rank correlation: pearson() of the midrank-transformed series.
double spearman(std::span<const double> x, std::span<const double> y);

/// Least-squares fit of y on {1, x, ..., x^order} via Householder QR of the
/// centered design matrix. Requires N > order + 1 and non-constant x.
RegressionFit fit_polynomial(const PairedSample& sample, int order);

}  // namespace lindep
