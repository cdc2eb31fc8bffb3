#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lindep/types.hpp"

namespace lindep {

struct BdsConfig {
  int embedding = 2;        // window length m
  double eta = 0.5;         // distance threshold, as a multiple of the sample sd
  bool eta_absolute = false;  // treat eta as an absolute distance instead
};

struct BdsResult {
  double statistic = 0.0;  // asymptotically N(0,1) under the i.i.d. null
  double p_value = 1.0;    // two-sided
  double c1 = 0.0;         // correlation integral at dimension 1
  double cm = 0.0;         // correlation integral at the embedding dimension
  double epsilon = 0.0;    // absolute distance threshold used
  int embedding = 0;
  std::vector<std::string> warnings;
};

/// Number of pairs of m-length consecutive windows whose max-norm distance is
/// strictly below epsilon. Exact: candidates are pruned on the sorted first
/// coordinate and the remaining coordinates checked directly.
std::uint64_t window_pair_count(std::span<const double> s, int embedding, double epsilon);

/// window_pair_count over all C(N-m+1, 2) window pairs.
double correlation_integral(std::span<const double> s, int embedding, double epsilon);

/**
 * BDS test of the i.i.d. null.
 *
 * statistic = sqrt(N) * (C_m - C_1^m) / sigma_m, where C_1 and the triple
 * statistic K (fraction of ordered triples with both pairs within epsilon)
 * are estimated over the full series and
 *
 *   sigma_m^2 = 4 * [ K^m + 2 * sum_{j=1}^{m-1} K^{m-j} C^{2j}
 *                     + (m-1)^2 C^{2m} - m^2 K C^{2m-2} ].
 *
 * The p-value is the two-sided standard-normal tail. Asymptotic: a warning
 * is attached below N = 200.
 */
BdsResult bds_statistic(std::span<const double> s, const BdsConfig& config = {});

}  // namespace lindep
