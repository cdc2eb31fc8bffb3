#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "lindep/bds.hpp"
#include "lindep/datagen.hpp"
#include "lindep/stats.hpp"

using namespace lindep;

namespace {

// Test-local oracle: direct enumeration over all window pairs.
std::uint64_t naive_pair_count(const std::vector<double>& s, int m, double eps) {
  const std::size_t windows = s.size() - static_cast<std::size_t>(m) + 1;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    for (std::size_t j = i + 1; j < windows; ++j) {
      bool match = true;
      for (int q = 0; q < m; ++q) {
        if (std::abs(s[i + q] - s[j + q]) >= eps) {
          match = false;
          break;
        }
      }
      count += match;
    }
  }
  return count;
}

std::vector<double> logistic_map(std::size_t n, double x0) {
  std::vector<double> s(n);
  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    x = 4.0 * x * (1.0 - x);
    s[i] = x;
  }
  return s;
}

}  // namespace

TEST_CASE("correlation integral degenerate cases") {
  const std::vector<double> constant(50, 1.25);
  CHECK(correlation_integral(constant, 2, 0.5) == 1.0);
  CHECK(correlation_integral(constant, 1, 1e-9) == 1.0);

  std::vector<double> alternating(100);
  for (int i = 0; i < 100; ++i) alternating[i] = (i % 2) * 10.0;
  CHECK(correlation_integral(alternating, 1, 1.0) == 2450.0 / 4950.0);

  SeededRng rng(41);
  std::vector<double> random(80);
  for (auto& v : random) v = rng.normal();
  CHECK(correlation_integral(random, 2, 1e9) == 1.0);  // threshold swallows everything

  CHECK_THROWS_AS(correlation_integral(random, 80, 0.5), TooShort);
  CHECK_THROWS_AS(correlation_integral(random, 2, 0.0), InvalidParameter);
  CHECK_THROWS_AS(correlation_integral(random, 0, 0.5), InvalidParameter);
}

TEST_CASE("window_pair_count equals naive enumeration exactly") {
  SeededRng rng(42);
  for (int rep = 0; rep < 12; ++rep) {
    const std::size_t n = 50 + static_cast<std::size_t>(rng.uniform() * 150);
    std::vector<double> s(n);
    const bool discrete = rep % 3 == 0;
    for (auto& v : s) v = discrete ? std::floor(rng.normal() * 2.0) : rng.normal();
    for (int m : {1, 2, 3, 5}) {
      const double eps = 0.2 + rng.uniform();
      CHECK(window_pair_count(s, m, eps) == naive_pair_count(s, m, eps));
    }
  }
}

TEST_CASE("correlation integral: higher embedding never matches more") {
  SeededRng rng(43);
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<double> s(300);
    for (auto& v : s) v = rng.normal();
    const double eps = 0.5;
    const double c1 = correlation_integral(s, 1, eps);
    const double c2 = correlation_integral(s, 2, eps);
    const double c3 = correlation_integral(s, 3, eps);
    CHECK(c2 <= c1);
    CHECK(c3 <= c2);
  }
}

TEST_CASE("correlation integral is shift invariant") {
  SeededRng rng(44);
  std::vector<double> s(200);
  for (auto& v : s) v = std::floor(rng.normal() * 4.0);  // integer-valued: shifts stay exact
  std::vector<double> shifted = s;
  for (auto& v : shifted) v += 1000.0;
  for (int m : {1, 2, 3}) {
    CHECK(window_pair_count(s, m, 1.5) == window_pair_count(shifted, m, 1.5));
  }
}

TEST_CASE("bds statistic on iid data is modest; on the logistic map it explodes") {
  SeededRng rng(45);
  std::vector<double> iid(4000);
  for (auto& v : iid) v = rng.normal();
  const BdsResult null_result = bds_statistic(iid);
  CHECK(null_result.p_value >= 0.0);
  CHECK(null_result.p_value <= 1.0);
  CHECK(std::abs(null_result.statistic) < 4.0);
  CHECK(null_result.c1 > 0.0);
  CHECK(null_result.c1 < 1.0);
  CHECK(null_result.cm <= null_result.c1);
  CHECK(null_result.epsilon == doctest::Approx(0.5 * std::sqrt(sample_variance(iid))));

  const std::vector<double> chaos = logistic_map(2000, 0.323);
  const BdsResult chaotic = bds_statistic(chaos);
  CHECK(chaotic.p_value < 0.001);
  CHECK(std::abs(chaotic.statistic) > 10.0);
}

TEST_CASE("bds null calibration, light version") {
  int rejections = 0;
  const int runs = 40;
  for (int s = 0; s < runs; ++s) {
    SeededRng rng(1000 + s);
    std::vector<double> iid(2000);
    for (auto& v : iid) v = rng.normal();
    rejections += bds_statistic(iid).p_value < 0.05;
  }
  CHECK(rejections <= 6);  // ~5% of 40 plus slack
}

TEST_CASE("bds configuration and error paths") {
  SeededRng rng(46);
  std::vector<double> s(500);
  for (auto& v : s) v = rng.normal();

  BdsConfig absolute;
  absolute.eta = 0.7;
  absolute.eta_absolute = true;
  const BdsResult r = bds_statistic(s, absolute);
  CHECK(r.epsilon == 0.7);

  BdsConfig bad;
  bad.embedding = 1;
  CHECK_THROWS_AS(bds_statistic(s, bad), InvalidParameter);
  CHECK_THROWS_AS(bds_statistic(std::vector<double>{1, 2}, BdsConfig{}), TooShort);
  CHECK_THROWS_AS(bds_statistic(std::vector<double>(300, 3.0), BdsConfig{}), ZeroVariance);

  std::vector<double> tiny(s.begin(), s.begin() + 150);
  CHECK_FALSE(bds_statistic(tiny).warnings.empty());  // below the asymptotic regime
}
