#include "lindep/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace lindep {

std::vector<std::int64_t> DiscretizedSeries::bin_counts() const {
  std::vector<std::int64_t> counts(bin_count, 0);
  for (std::int32_t label : labels) ++counts[label];
  return counts;
}

std::vector<std::int64_t> JointHistogram::row_sums() const {
  std::vector<std::int64_t> sums(rows, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) sums[i] += at(i, j);
  }
  return sums;
}

std::vector<std::int64_t> JointHistogram::col_sums() const {
  std::vector<std::int64_t> sums(cols, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) sums[j] += at(i, j);
  }
  return sums;
}

DiscretizedSeries equal_frequency_bins(std::span<const double> s, int bins) {
  if (bins < 2) {
    throw InvalidParameter("equal_frequency_bins: need at least 2 bins, got " +
                           std::to_string(bins));
  }
  const std::size_t n = s.size();
  if (n < static_cast<std::size_t>(bins)) {
    throw TooFewPoints("equal_frequency_bins: " + std::to_string(n) + " points for " +
                       std::to_string(bins) + " bins");
  }
  require_finite(s, "equal_frequency_bins");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s[a] < s[b] || (s[a] == s[b] && a < b);
  });

  DiscretizedSeries out;
  out.bin_count = bins;
  out.labels.resize(n);
  out.boundaries.assign(bins, {std::numeric_limits<double>::infinity(),
                               -std::numeric_limits<double>::infinity()});
  for (std::size_t pos = 0; pos < n; ++pos) {
    const auto label = static_cast<std::int32_t>(
        static_cast<std::uint64_t>(pos) * static_cast<std::uint64_t>(bins) / n);
    out.labels[order[pos]] = label;
    auto& [lo, hi] = out.boundaries[label];
    lo = std::min(lo, s[order[pos]]);
    hi = std::max(hi, s[order[pos]]);
  }
  return out;
}

EntropyEstimate plugin_entropy(std::span<const std::int64_t> counts, std::int64_t n) {
  if (n < 1) {
    throw CountMismatch("plugin_entropy: total must be >= 1");
  }
  std::int64_t total = 0;
  std::vector<std::int64_t> nonzero;
  nonzero.reserve(counts.size());
  for (std::int64_t c : counts) {
    if (c < 0) {
      throw CountMismatch("plugin_entropy: negative count");
    }
    total += c;
    if (c > 0) nonzero.push_back(c);
  }
  if (total != n) {
    throw CountMismatch("plugin_entropy: counts sum to " + std::to_string(total) +
                        ", expected " + std::to_string(n));
  }

  // Canonical summation order: permutation-invariant and bitwise symmetric.
  std::sort(nonzero.begin(), nonzero.end());
  double h = 0.0;
  const double dn = static_cast<double>(n);
  for (std::int64_t c : nonzero) {
    const double p = static_cast<double>(c) / dn;
    h -= p * std::log(p);
  }

  EntropyEstimate e;
  e.value = std::max(h, 0.0);
  e.nonempty_bins = static_cast<int>(nonzero.size());
  e.corrected = false;
  e.n = n;
  return e;
}

EntropyEstimate miller_madow(const EntropyEstimate& e, double divisor) {
  if (e.corrected) {
    throw AlreadyCorrected("miller_madow: estimate already corrected");
  }
  if (!(divisor > 0.0)) {
    throw InvalidParameter("miller_madow: divisor must be positive");
  }
  EntropyEstimate out = e;
  out.value += static_cast<double>(e.nonempty_bins - 1) / (divisor * static_cast<double>(e.n));
  out.corrected = true;
  return out;
}

JointHistogram joint_histogram(const DiscretizedSeries& dx, const DiscretizedSeries& dy) {
  if (dx.size() != dy.size()) {
    throw LengthMismatch("joint_histogram: label lengths " + std::to_string(dx.size()) + " vs " +
                         std::to_string(dy.size()));
  }
  JointHistogram h;
  h.rows = dx.bin_count;
  h.cols = dy.bin_count;
  h.n = static_cast<std::int64_t>(dx.size());
  h.counts.assign(static_cast<std::size_t>(h.rows) * h.cols, 0);
  for (std::size_t t = 0; t < dx.size(); ++t) {
    ++h.counts[static_cast<std::size_t>(dx.labels[t]) * h.cols + dy.labels[t]];
  }
  return h;
}

double mutual_information(const DiscretizedSeries& dx, const DiscretizedSeries& dy,
                          bool correction, double divisor) {
  const JointHistogram joint = joint_histogram(dx, dy);
  const std::size_t n = dx.size();
  if (n < static_cast<std::size_t>(std::max(dx.bin_count, dy.bin_count))) {
    throw TooFewPoints("mutual_information: fewer observations than bins");
  }

  EntropyEstimate hx = plugin_entropy(dx.bin_counts(), joint.n);
  EntropyEstimate hy = plugin_entropy(dy.bin_counts(), joint.n);
  EntropyEstimate hxy = plugin_entropy(joint.counts, joint.n);
  if (correction) {
    hx = miller_madow(hx, divisor);
    hy = miller_madow(hy, divisor);
    hxy = miller_madow(hxy, divisor);
  }
  return std::max(hx.value + hy.value - hxy.value, 0.0);
}

double gaussian_mi(double rho) {
  if (!(std::abs(rho) < 1.0)) {
    throw PerfectCorrelation("gaussian_mi: |rho| must be < 1, got " + std::to_string(rho));
  }
  return -0.5 * std::log1p(-rho * rho);
}

double binary_correlation_function(std::span<const std::uint8_t> seq, int distance) {
  if (distance < 1) {
    throw InvalidParameter("binary_correlation_function: distance must be >= 1");
  }
  const std::size_t n = seq.size();
  if (n <= static_cast<std::size_t>(distance)) {
    throw TooShort("binary_correlation_function: sequence length " + std::to_string(n) +
                   " for distance " + std::to_string(distance));
  }
  std::uint64_t ones = 0;
  for (std::uint8_t v : seq) {
    if (v > 1) {
      throw InvalidParameter("binary_correlation_function: symbols must be 0 or 1");
    }
    ones += v;
  }
  std::uint64_t matched = 0;
  const std::size_t d = static_cast<std::size_t>(distance);
  for (std::size_t t = 0; t + d < n; ++t) {
    matched += static_cast<std::uint64_t>(seq[t]) * seq[t + d];
  }
  const double p1 = static_cast<double>(ones) / static_cast<double>(n);
  const double m11 = static_cast<double>(matched) / static_cast<double>(n - d);
  return m11 - p1 * p1;
}

double binary_mi_approx(double gamma, double p0, double p1) {
  if (!(p0 > 0.0) || !(p1 > 0.0) || std::abs(p0 + p1 - 1.0) > 1e-9) {
    throw InvalidParameter("binary_mi_approx: probabilities must be positive and sum to 1");
  }
  const double r = gamma / (p0 * p1);
  return 0.5 * r * r;
}

}  // namespace lindep
