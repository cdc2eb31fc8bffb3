#include "lindep/bds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lindep/stats.hpp"

namespace lindep {

namespace {

std::vector<std::size_t> sorted_order(std::span<const double> s, std::size_t count) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s[a] < s[b] || (s[a] == s[b] && a < b);
  });
  return order;
}

/// Per-point neighbor counts c_t = #{ u != t : |s_u - s_t| < eps } via a
/// two-pointer sweep over the sorted values. Comparisons are written as
/// (larger - smaller) < eps, matching |a - b| < eps exactly.
std::vector<std::uint64_t> neighbor_counts(std::span<const double> s, double eps) {
  const std::size_t n = s.size();
  std::vector<double> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());

  std::vector<std::uint64_t> c(n, 0);
  std::size_t lo = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (v[i] - v[lo] >= eps) ++lo;
    c[i] += i - lo;
  }
  std::size_t hi = n - 1;
  for (std::size_t i = n; i-- > 0;) {
    while (v[hi] - v[i] >= eps) --hi;
    c[i] += hi - i;
  }
  return c;
}

}  // namespace

std::uint64_t window_pair_count(std::span<const double> s, int embedding, double epsilon) {
  if (embedding < 1) {
    throw InvalidParameter("window_pair_count: embedding must be >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw InvalidParameter("window_pair_count: epsilon must be positive");
  }
  const std::size_t n = s.size();
  const std::size_t m = static_cast<std::size_t>(embedding);
  if (n <= m) {
    throw TooShort("window_pair_count: series length " + std::to_string(n) +
                   " for embedding " + std::to_string(embedding));
  }
  require_finite(s, "window_pair_count");

  const std::size_t windows = n - m + 1;
  const std::vector<std::size_t> order = sorted_order(s, windows);

  std::uint64_t count = 0;
  std::size_t lo = 0;
  for (std::size_t a = 0; a < windows; ++a) {
    const std::size_t i = order[a];
    while (s[i] - s[order[lo]] >= epsilon) ++lo;
    if (m == 1) {
      count += a - lo;
      continue;
    }
    for (std::size_t b = lo; b < a; ++b) {
      const std::size_t j = order[b];
      bool match = true;
      for (std::size_t q = 1; q < m; ++q) {
        if (std::abs(s[i + q] - s[j + q]) >= epsilon) {
          match = false;
          break;
        }
      }
      count += match;
    }
  }
  return count;
}

double correlation_integral(std::span<const double> s, int embedding, double epsilon) {
  const std::uint64_t count = window_pair_count(s, embedding, epsilon);
  const std::uint64_t windows = s.size() - static_cast<std::size_t>(embedding) + 1;
  const double pairs = 0.5 * static_cast<double>(windows) * static_cast<double>(windows - 1);
  return static_cast<double>(count) / pairs;
}

BdsResult bds_statistic(std::span<const double> s, const BdsConfig& config) {
  if (config.embedding < 2) {
    throw InvalidParameter("bds_statistic: embedding must be >= 2");
  }
  const std::size_t n = s.size();
  const int m = config.embedding;
  if (n <= static_cast<std::size_t>(m)) {
    throw TooShort("bds_statistic: series length " + std::to_string(n) + " for embedding " +
                   std::to_string(m));
  }
  require_finite(s, "bds_statistic");

  BdsResult result;
  result.embedding = m;
  if (n < 200) {
    result.warnings.push_back("series length " + std::to_string(n) +
                              " is below 200; the N(0,1) approximation is asymptotic");
  }

  double eps = config.eta;
  if (!config.eta_absolute) {
    const double sd = sample_stddev(s);
    if (sd == 0.0) {
      throw ZeroVariance("bds_statistic: constant series");
    }
    eps = config.eta * sd;
  }
  if (!(eps > 0.0)) {
    throw InvalidParameter("bds_statistic: distance threshold must be positive");
  }
  result.epsilon = eps;

  // Dimension-1 statistics over the full series: C (pair fraction) and the
  // triple statistic K = sum c_t (c_t - 1) / (n (n-1) (n-2)).
  const std::vector<std::uint64_t> c = neighbor_counts(s, eps);
  std::uint64_t pair_sum = 0;
  std::uint64_t triple_sum = 0;
  for (std::uint64_t ct : c) {
    pair_sum += ct;
    triple_sum += ct * (ct - 1);
  }
  const double dn = static_cast<double>(n);
  const double c1 = static_cast<double>(pair_sum) / (dn * (dn - 1.0));
  const double k = static_cast<double>(triple_sum) / (dn * (dn - 1.0) * (dn - 2.0));
  result.c1 = c1;
  result.cm = correlation_integral(s, m, eps);

  double tail = 0.0;
  for (int j = 1; j <= m - 1; ++j) {
    tail += std::pow(k, m - j) * std::pow(c1, 2 * j);
  }
  const double variance =
      4.0 * (std::pow(k, m) + 2.0 * tail + static_cast<double>(m - 1) * (m - 1) * std::pow(c1, 2 * m) -
             static_cast<double>(m) * m * k * std::pow(c1, 2 * m - 2));
  if (!(variance > 0.0)) {
    throw ZeroVariance("bds_statistic: degenerate variance estimate (threshold too wide?)");
  }

  result.statistic = std::sqrt(dn) * (result.cm - std::pow(c1, m)) / std::sqrt(variance);
  result.p_value = std::erfc(std::abs(result.statistic) / std::sqrt(2.0));
  return result;
}

}  // namespace lindep
