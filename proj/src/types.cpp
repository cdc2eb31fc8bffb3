#include "lindep/types.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace lindep {

void require_finite(std::span<const double> s, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i])) {
      throw DegenerateInput(std::string(what) + ": non-finite value at index " + std::to_string(i));
    }
  }
}

PairedSample::PairedSample(Series x_values, Series y_values)
    : x(std::move(x_values)), y(std::move(y_values)) {
  if (x.size() != y.size()) {
    throw LengthMismatch("PairedSample: x has " + std::to_string(x.size()) + " values, y has " +
                         std::to_string(y.size()));
  }
  if (x.size() < 3) {
    throw DegenerateInput("PairedSample: need at least 3 observations, got " +
                          std::to_string(x.size()));
  }
  require_finite(x, "PairedSample x");
  require_finite(y, "PairedSample y");
}

std::vector<double> RegressionFit::coefficients() const {
  // Expand sum_j c_j (t - offset)^j into the monomial basis via repeated
  // synthetic multiplication by (t - offset).
  const int k = order;
  std::vector<double> out(static_cast<std::size_t>(k) + 1, 0.0);
  for (int j = k; j >= 0; --j) {
    // out(t) := out(t) * (t - offset) + c_j
    for (int i = k; i >= 1; --i) {
      out[i] = out[i - 1] - offset * out[i];
    }
    out[0] = centered_coefficients[j] - offset * out[0];
  }
  return out;
}

}  // namespace lindep
