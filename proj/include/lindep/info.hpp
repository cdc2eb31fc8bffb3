#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lindep/types.hpp"

namespace lindep {

/// Divisor in the Miller-Madow term (m-1)/(divisor*N). The classical
/// correction uses 2; some sources print the formula without it.
inline constexpr double kMillerMadowDivisor = 2.0;

/// Equal-frequency discretization of a series.
struct DiscretizedSeries {
  std::vector<std::int32_t> labels;                    // aligned with the source
  int bin_count = 0;                                   // m
  std::vector<std::pair<double, double>> boundaries;   // per-bin [lo, hi] values

  std::size_t size() const { return labels.size(); }
  std::vector<std::int64_t> bin_counts() const;
};

/// m_x by m_y contingency counts.
struct JointHistogram {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> counts;  // row-major
  std::int64_t n = 0;

  std::int64_t at(int i, int j) const { return counts[static_cast<std::size_t>(i) * cols + j]; }
  std::vector<std::int64_t> row_sums() const;
  std::vector<std::int64_t> col_sums() const;
};

struct EntropyEstimate {
  double value = 0.0;        // nats
  int nonempty_bins = 0;
  bool corrected = false;
  std::int64_t n = 0;
};

/// Assigns bin labels so occupancies differ by at most one. Ties are broken
/// by (value, original index) sort order, so runs of equal values split
/// across boundaries deterministically.
DiscretizedSeries equal_frequency_bins(std::span<const double> s, int bins);

/// Plug-in (maximum likelihood) entropy of a count vector, in nats.
/// Zero-count bins contribute nothing. Summation runs over the sorted
/// nonzero counts so permuting bins cannot change the result.
EntropyEstimate plugin_entropy(std::span<const std::int64_t> counts, std::int64_t n);

/// Adds (m-1)/(divisor*n) with m = nonempty bins. Throws AlreadyCorrected on
/// a corrected estimate.
EntropyEstimate miller_madow(const EntropyEstimate& e, double divisor = kMillerMadowDivisor);

JointHistogram joint_histogram(const DiscretizedSeries& dx, const DiscretizedSeries& dy);

/// H(X) + H(Y) - H(X,Y) in nats, each term Miller-Madow corrected when
/// `correction` is set; the result is floored at zero.
double mutual_information(const DiscretizedSeries& dx, const DiscretizedSeries& dy,
                          bool correction, double divisor = kMillerMadowDivisor);

/// -0.5 * ln(1 - rho^2): mutual information of a bivariate normal pair.
double gaussian_mi(double rho);

/// Distance-d autocovariance of a 0/1 sequence: E[s_t s_{t+d}] - P1^2,
/// with P1 estimated over the whole sequence.
double binary_correlation_function(std::span<const std::uint8_t> seq, int distance);

/// Small-correlation approximation 0.5 * (gamma / (p0*p1))^2 for the mutual
/// information of a binary sequence at a fixed lag. Valid when
/// |gamma/(p0*p1)| is small; the caller is responsible for the regime.
double binary_mi_approx(double gamma, double p0, double p1);

}  // namespace lindep
