#include <doctest.h>

#include <cmath>
#include <vector>

#include "lindep/datagen.hpp"
#include "lindep/info.hpp"
#include "lindep/stats.hpp"

using namespace lindep;

TEST_CASE("inverse normal cdf at known quantiles") {
  CHECK(inverse_normal_cdf(0.5) == 0.0);
  CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(inverse_normal_cdf(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-12));
  CHECK(inverse_normal_cdf(0.8413447460685429) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(inverse_normal_cdf(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-12));
  CHECK(inverse_normal_cdf(0.3) + inverse_normal_cdf(0.7) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(inverse_normal_cdf(0.0), InvalidParameter);
  CHECK_THROWS_AS(inverse_normal_cdf(1.0), InvalidParameter);
}

TEST_CASE("seeded rng streams are reproducible and seed-sensitive") {
  SeededRng a(99), b(99), c(100);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const double va = a.normal();
    all_equal = all_equal && (va == b.normal());
    any_diff = any_diff || (va != c.normal());
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("bivariate normal generator hits its construction targets") {
  const PairedSample s = gen_bivariate_normal(0.6, 10000, 7);
  const PairedSample again = gen_bivariate_normal(0.6, 10000, 7);
  CHECK(s.x == again.x);  // bitwise determinism
  CHECK(s.y == again.y);

  CHECK(pearson(s.x, s.y) == doctest::Approx(0.6).epsilon(0.05));
  const double root_n = std::sqrt(10000.0);
  CHECK(std::abs(mean(s.x)) < 4.0 / root_n);
  CHECK(std::abs(mean(s.y)) < 4.0 / root_n);
  CHECK(std::abs(sample_variance(s.x) - 1.0) < 8.0 / root_n);
  CHECK(std::abs(sample_variance(s.y) - 1.0) < 8.0 / root_n);

  const PairedSample indep = gen_bivariate_normal(0.0, 10000, 8);
  CHECK(std::abs(pearson(indep.x, indep.y)) < 0.05);

  CHECK_THROWS_AS(gen_bivariate_normal(1.0, 100, 1), InvalidParameter);
}

TEST_CASE("bivariate normal matches the gaussian MI oracle") {
  const PairedSample s = gen_bivariate_normal(0.9, 10000, 9);
  const double mi = mutual_information(equal_frequency_bins(s.x, 50),
                                       equal_frequency_bins(s.y, 50), true);
  CHECK(mi == doctest::Approx(gaussian_mi(0.9)).epsilon(0.12));
}

TEST_CASE("polynomial generator validation") {
  CHECK_THROWS_AS(gen_polynomial(0.5, 4, 100, 1), InvalidParameter);
  CHECK_THROWS_AS(gen_polynomial(-0.5, 2, 100, 1), InvalidParameter);
  const PairedSample s = gen_polynomial(0.5, 3, 300, 2);
  CHECK(s.size() == 300);
}

TEST_CASE("exponential generator shape") {
  const PairedSample s = gen_exponential(20000, 3);
  // E[exp(0.3 X)] = exp(0.045)
  CHECK(mean(s.y) == doctest::Approx(std::exp(0.045)).epsilon(0.02));
  CHECK(s.y != gen_exponential(20000, 4).y);
}

TEST_CASE("contrived panels calibrate to the shared correlation") {
  for (int panel = 1; panel <= 4; ++panel) {
    for (std::uint64_t seed : {11ULL, 12ULL}) {
      const PairedSample s = gen_anscombe_like(panel, 10000, seed);
      CHECK(pearson(s.x, s.y) == doctest::Approx(kPanelRhoTarget).epsilon(0.03));
    }
  }
  CHECK_THROWS_AS(gen_anscombe_like(5, 1000, 1), InvalidParameter);
  CHECK_THROWS_AS(gen_anscombe_like(0, 1000, 1), InvalidParameter);
}

TEST_CASE("binary markov chain statistics") {
  CHECK(binary_markov_gamma(0.4, 3) == doctest::Approx(0.25 * 0.2 * 0.2 * 0.2).epsilon(1e-12));
  CHECK(binary_markov_gamma(0.5, 5) == 0.0);

  const auto chain = gen_binary_markov(0.4, 500000, 17);
  const auto again = gen_binary_markov(0.4, 500000, 17);
  CHECK(chain == again);

  double p1 = 0.0;
  for (auto v : chain) p1 += v;
  p1 /= static_cast<double>(chain.size());
  CHECK(p1 == doctest::Approx(0.5).epsilon(0.02));

  // Empirical autocovariance vs the closed form, within Monte-Carlo bands.
  for (int d : {1, 2, 3}) {
    const double gamma = binary_correlation_function(chain, d);
    const double exact = binary_markov_gamma(0.4, d);
    CHECK(std::abs(gamma - exact) < 4.0 * 0.5 / std::sqrt(500000.0));
  }

  CHECK_THROWS_AS(gen_binary_markov(0.0, 100, 1), InvalidParameter);
  CHECK_THROWS_AS(gen_binary_markov(1.0, 100, 1), InvalidParameter);
}
