#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lindep/errors.hpp"

namespace lindep {

using Series = std::vector<double>;

/// Throws DegenerateInput if any element is NaN or infinite.
void require_finite(std::span<const double> s, const char* what);

/// Aligned (x, y) observation pairs, the unit of analysis.
///
/// Invariants enforced at construction: equal lengths, N >= 3, all values
/// finite.
struct PairedSample {
  Series x;
  Series y;

  PairedSample() = default;
  PairedSample(Series x_values, Series y_values);

  std::size_t size() const { return x.size(); }
};

/// Ordinary least-squares polynomial fit of y on x.
///
/// The fit is performed in the centered basis p(t) = sum_j c_j (t - offset)^j
/// with offset = mean(x), which keeps higher powers well conditioned.
/// coefficients() expands back to the monomial basis (intercept first).
struct RegressionFit {
  int order = 0;
  double offset = 0.0;
  std::vector<double> centered_coefficients;
  Series fitted;
  Series residuals;

  std::vector<double> coefficients() const;
};

}  // namespace lindep
