#include "lindep/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lindep {

namespace {

void check_pair(std::span<const double> x, std::span<const double> y, const char* what) {
  if (x.size() != y.size()) {
    throw LengthMismatch(std::string(what) + ": lengths " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
  if (x.size() < 2) {
    throw DegenerateInput(std::string(what) + ": need at least 2 observations");
  }
}

}  // namespace

double mean(std::span<const double> s) {
  if (s.empty()) {
    throw DegenerateInput("mean: empty series");
  }
  double sum = 0.0;
  for (double v : s) sum += v;
  return sum / static_cast<double>(s.size());
}

double sample_variance(std::span<const double> s) {
  if (s.size() < 2) {
    throw DegenerateInput("sample_variance: need at least 2 observations");
  }
  const double m = mean(s);
  double ss = 0.0;
  for (double v : s) {
    const double d = v - m;
    ss += d * d;
  }
  return ss / static_cast<double>(s.size() - 1);
}

double sample_stddev(std::span<const double> s) { return std::sqrt(sample_variance(s)); }

double covariance(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "covariance");
  const double mx = mean(x);
  const double my = mean(y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += (x[i] - mx) * (y[i] - my);
  }
  return sum / static_cast<double>(x.size() - 1);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "pearson");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw ConstantSeries("pearson: zero standard deviation");
  }
  // sqrt of the product (not the product of sqrts): identical inputs then
  // yield exactly 1, since sqrt(q*q) == q in IEEE arithmetic.
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

std::vector<double> midranks(std::span<const double> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s[a] < s[b] || (s[a] == s[b] && a < b);
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && s[order[j + 1]] == s[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = r;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "spearman");
  const std::vector<double> rx = midranks(x);
  const std::vector<double> ry = midranks(y);
  return pearson(rx, ry);
}

RegressionFit fit_polynomial(const PairedSample& sample, int order) {
  if (order < 1) {
    throw InvalidParameter("fit_polynomial: order must be >= 1, got " + std::to_string(order));
  }
  const std::size_t n = sample.size();
  if (n <= static_cast<std::size_t>(order) + 1) {
    throw DegenerateInput("fit_polynomial: need more than order+1 = " + std::to_string(order + 1) +
                          " observations, got " + std::to_string(n));
  }

  const double offset = mean(sample.x);
  Eigen::MatrixXd design(n, order + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = sample.x[i] - offset;
    double p = 1.0;
    for (int j = 0; j <= order; ++j) {
      design(static_cast<Eigen::Index>(i), j) = p;
      p *= t;
    }
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < order + 1) {
    throw SingularDesign("fit_polynomial: rank-deficient design (constant or near-constant x?)");
  }

  const Eigen::Map<const Eigen::VectorXd> yvec(sample.y.data(), static_cast<Eigen::Index>(n));
  const Eigen::VectorXd coef = qr.solve(yvec);
  const Eigen::VectorXd fitted = design * coef;

  RegressionFit fit;
  fit.order = order;
  fit.offset = offset;
  fit.centered_coefficients.assign(coef.data(), coef.data() + order + 1);
  fit.fitted.resize(n);
  fit.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    fit.fitted[i] = fitted(static_cast<Eigen::Index>(i));
    fit.residuals[i] = sample.y[i] - fit.fitted[i];
  }
  return fit;
}

}  // namespace lindep
