#include <doctest.h>

#include <cmath>
#include <vector>

#include "lindep/datagen.hpp"
#include "lindep/stats.hpp"

using namespace lindep;

TEST_CASE("covariance basics") {
  const std::vector<double> up{1, 2, 3};
  const std::vector<double> down{3, 2, 1};
  CHECK(covariance(up, up) == doctest::Approx(1.0));
  CHECK(covariance(up, down) == doctest::Approx(-1.0));

  // Hand evaluation of the N-1 sum: deviations (-1.5,-0.5,0.5,1.5) and
  // (-1.5,0.5,-0.5,1.5) give 4/3.
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{1, 3, 2, 4};
  CHECK(covariance(x, y) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(covariance(up, x), LengthMismatch);
  CHECK_THROWS_AS(covariance(std::vector<double>{1.0}, std::vector<double>{2.0}),
                  DegenerateInput);
}

TEST_CASE("pearson on exact lines and degenerate input") {
  std::vector<double> x{-2, -1, 0, 1, 2, 5};
  std::vector<double> y;
  for (double v : x) y.push_back(2.0 * v + 1.0);
  CHECK(pearson(x, y) == 1.0);  // bitwise: perfect positive line

  std::vector<double> neg;
  for (double v : x) neg.push_back(-0.5 * v + 3.0);
  CHECK(pearson(x, neg) == -1.0);

  const std::vector<double> constant(6, 7.5);
  CHECK_THROWS_AS(pearson(x, constant), ConstantSeries);
}

TEST_CASE("pearson symmetry and affine invariance") {
  SeededRng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> x(40), y(40), ax(40);
    for (int i = 0; i < 40; ++i) {
      x[i] = rng.normal();
      y[i] = 0.4 * x[i] + rng.normal();
      ax[i] = 2.75 * x[i] + 13.0;
    }
    CHECK(pearson(x, y) == pearson(y, x));  // exact
    CHECK(pearson(ax, y) == doctest::Approx(pearson(x, y)).epsilon(1e-12));
    CHECK(std::abs(pearson(x, y)) <= 1.0);
  }
}

TEST_CASE("spearman on monotone maps and the hand-ranked example") {
  std::vector<double> x{0.1, 0.7, 1.5, 2.0, 3.2};
  std::vector<double> expx;
  for (double v : x) expx.push_back(std::exp(v));
  CHECK(spearman(x, expx) == 1.0);  // rank-preserving map, exactly 1

  std::vector<double> cubed;
  for (double v : x) cubed.push_back(-v * v * v);
  CHECK(spearman(x, cubed) == -1.0);

  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> b{1, 3, 2, 4};
  CHECK(spearman(a, b) == doctest::Approx(0.8).epsilon(1e-14));

  CHECK_THROWS_AS(spearman(a, std::vector<double>(4, 2.0)), ConstantSeries);
}

TEST_CASE("midranks average over ties") {
  const std::vector<double> s{10, 20, 20, 30};
  const std::vector<double> r = midranks(s);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 2.5);
  CHECK(r[2] == 2.5);
  CHECK(r[3] == 4.0);
}

TEST_CASE("fit_polynomial recovers an exact line") {
  Series x{-3, -1, 0, 2, 4, 7};
  Series y;
  for (double v : x) y.push_back(3.0 * v + 2.0);
  const RegressionFit fit = fit_polynomial(PairedSample(x, y), 1);
  const std::vector<double> coef = fit.coefficients();
  CHECK(coef[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(coef[1] == doctest::Approx(3.0).epsilon(1e-9));
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(fit.residuals[i]) < 1e-9);
    CHECK(fit.fitted[i] + fit.residuals[i] == doctest::Approx(y[i]).epsilon(1e-12));
  }
}

TEST_CASE("even function has no linear component on a symmetric grid") {
  Series x, y;
  for (int i = -10; i <= 10; ++i) {
    x.push_back(i);
    y.push_back(static_cast<double>(i) * i);
  }
  const RegressionFit fit = fit_polynomial(PairedSample(x, y), 1);
  const std::vector<double> coef = fit.coefficients();
  CHECK(coef[1] == doctest::Approx(0.0).epsilon(1e-12));
  const double mean_sq = mean(y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(fit.residuals[i] == doctest::Approx(y[i] - mean_sq).epsilon(1e-9));
  }
}

TEST_CASE("quadratic generator coefficients are recovered within sampling error") {
  const PairedSample sample = gen_polynomial(0.5, 2, 10000, 4242);
  const RegressionFit fit = fit_polynomial(sample, 2);
  const std::vector<double> coef = fit.coefficients();
  // Construction oracle: y = 3x + 0.5 x^2 + noise(sd 1). The bands below are
  // a bit over three standard errors at N = 10,000.
  CHECK(std::abs(coef[0] - 0.0) < 0.05);
  CHECK(std::abs(coef[1] - 3.0) < 0.05);
  CHECK(std::abs(coef[2] - 0.5) < 0.04);
}

TEST_CASE("residual orthogonality against the design powers") {
  SeededRng rng(99);
  for (int order = 1; order <= 3; ++order) {
    Series x(500), y(500);
    for (int i = 0; i < 500; ++i) {
      x[i] = rng.normal();
      y[i] = 1.0 + 0.5 * x[i] - 0.2 * x[i] * x[i] + rng.normal();
    }
    const PairedSample sample(x, y);
    const RegressionFit fit = fit_polynomial(sample, order);
    for (int j = 0; j <= order; ++j) {
      double dot = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double p = std::pow(x[i] - fit.offset, j);
        dot += fit.residuals[i] * p;
        scale += std::abs(fit.residuals[i] * p);
      }
      CHECK(std::abs(dot) <= 1e-6 * std::max(scale, 1.0));
    }
    if (order == 1) {
      CHECK(std::abs(pearson(x, fit.residuals)) < 1e-9);
    }
  }
}

TEST_CASE("nested fits never increase the residual sum of squares") {
  SeededRng rng(123);
  for (int rep = 0; rep < 10; ++rep) {
    Series x(300), y(300);
    for (int i = 0; i < 300; ++i) {
      x[i] = rng.normal();
      y[i] = std::sin(x[i]) + 0.3 * rng.normal();
    }
    const PairedSample sample(x, y);
    double previous = std::numeric_limits<double>::infinity();
    for (int order = 1; order <= 4; ++order) {
      const RegressionFit fit = fit_polynomial(sample, order);
      double rss = 0.0;
      for (double z : fit.residuals) rss += z * z;
      CHECK(rss <= previous * (1.0 + 1e-12) + 1e-12);
      previous = rss;
    }
  }
}

TEST_CASE("fit_polynomial rejects bad input") {
  Series x{1, 2, 3};
  Series y{1, 2, 3};
  CHECK_THROWS_AS(fit_polynomial(PairedSample(x, y), 2), DegenerateInput);  // N <= k+1
  CHECK_THROWS_AS(fit_polynomial(PairedSample(x, y), 0), InvalidParameter);
  const Series constant(10, 3.0);
  Series noise(10);
  SeededRng rng(5);
  for (auto& v : noise) v = rng.normal();
  CHECK_THROWS_AS(fit_polynomial(PairedSample(constant, noise), 1), SingularDesign);
}
