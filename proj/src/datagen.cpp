#include "lindep/datagen.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "lindep/stats.hpp"

namespace lindep {

// Wichura's algorithm AS 241 (PPND16): minimax rational approximations on
// three regions, accurate to about 1e-16 relative.
double inverse_normal_cdf(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw InvalidParameter("inverse_normal_cdf: p must lie in (0, 1)");
  }
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num = (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                             6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                           1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                         1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
    const double den = (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                             3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                           5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                         4.2313330701600911252e+1) * r + 1.0);
    return q * num / den;
  }

  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    const double num = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                             2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                           3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                         4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
    const double den = (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                             1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                           6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                         2.05319162663775882187e+0) * r + 1.0);
    value = num / den;
  } else {
    r -= 5.0;
    const double num = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                             1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                           2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                         5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
    const double den = (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                             1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                           1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                         5.99832206555887937690e-1) * r + 1.0);
    value = num / den;
  }
  return (q < 0.0) ? -value : value;
}

PairedSample gen_bivariate_normal(double rho, std::size_t n, std::uint64_t seed) {
  if (!(std::abs(rho) < 1.0)) {
    throw InvalidParameter("gen_bivariate_normal: |rho| must be < 1");
  }
  SeededRng rng(seed);
  const double noise_scale = std::sqrt(1.0 - rho * rho);
  Series x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.normal();
    y[i] = rho * x[i] + noise_scale * rng.normal();
  }
  return PairedSample(std::move(x), std::move(y));
}

PairedSample gen_polynomial(double a, int order, std::size_t n, std::uint64_t seed) {
  if (order != 2 && order != 3) {
    throw InvalidParameter("gen_polynomial: order must be 2 or 3");
  }
  if (!(a >= 0.0)) {
    throw InvalidParameter("gen_polynomial: a must be >= 0");
  }
  SeededRng rng(seed);
  Series x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = rng.normal();
    const double power = (order == 2) ? xi * xi : xi * xi * xi;
    x[i] = xi;
    y[i] = 3.0 * xi + a * power + rng.normal();
  }
  return PairedSample(std::move(x), std::move(y));
}

PairedSample gen_exponential(std::size_t n, std::uint64_t seed, double noise_scale) {
  if (!(noise_scale >= 0.0)) {
    throw InvalidParameter("gen_exponential: noise_scale must be >= 0");
  }
  SeededRng rng(seed);
  Series x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.normal();
    y[i] = std::exp(0.3 * x[i]) + noise_scale * rng.normal();
  }
  return PairedSample(std::move(x), std::move(y));
}

namespace {

/// Deterministic bisection of theta against the sample-correlation target.
/// `make_y` must be a pure function of theta over variates fixed in advance,
/// and rho(theta) must be monotone over [lo, hi].
PairedSample calibrate_panel(const Series& x, const std::function<Series(double)>& make_y,
                             double lo, double hi, int panel) {
  const auto rho_at = [&](double theta) { return pearson(x, make_y(theta)); };
  const bool increasing = rho_at(hi) > rho_at(lo);
  double rho_lo = rho_at(lo), rho_hi = rho_at(hi);
  if ((kPanelRhoTarget - rho_lo) * (kPanelRhoTarget - rho_hi) > 0.0) {
    throw CalibrationFailure("gen_anscombe_like: panel " + std::to_string(panel) +
                             " cannot bracket the correlation target");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double r = rho_at(mid);
    if (std::abs(r - kPanelRhoTarget) < 1e-4) {
      return PairedSample(x, make_y(mid));
    }
    if ((r < kPanelRhoTarget) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double theta = 0.5 * (lo + hi);
  const Series y = make_y(theta);
  if (std::abs(pearson(x, y) - kPanelRhoTarget) > kPanelRhoTolerance) {
    throw CalibrationFailure("gen_anscombe_like: panel " + std::to_string(panel) +
                             " did not reach the correlation target");
  }
  return PairedSample(x, y);
}

}  // namespace

PairedSample gen_anscombe_like(int panel, std::size_t n, std::uint64_t seed) {
  if (panel < 1 || panel > 4) {
    throw InvalidParameter("gen_anscombe_like: panel must be in 1..4");
  }
  if (n < 40) {
    throw DegenerateInput("gen_anscombe_like: need at least 40 observations");
  }
  SeededRng rng(seed);

  switch (panel) {
    case 1: {  // line plus noise: y = x + theta * e
      Series x(n), e(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.normal();
        e[i] = rng.normal();
      }
      const auto make_y = [&](double theta) {
        Series y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + theta * e[i];
        return y;
      };
      return calibrate_panel(x, make_y, 0.05, 8.0, panel);
    }
    case 2: {  // noiseless concave arc: x ~ U(-1,1), y = -(x - theta)^2
      Series x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = 2.0 * rng.uniform() - 1.0;
      const auto make_y = [&](double theta) {
        Series y(n);
        for (std::size_t i = 0; i < n; ++i) {
          const double d = x[i] - theta;
          y[i] = -d * d;
        }
        return y;
      };
      return calibrate_panel(x, make_y, 0.0, 1.5, panel);
    }
    case 3: {  // tight line with a contaminating cluster (5%, centered so the
               // cluster shifts the level rather than twisting the fit)
      const std::size_t cluster = n / 20;
      Series x(n), e(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        x[i] = (i < cluster) ? 0.48 + 0.04 * u : u;
        e[i] = rng.normal();
      }
      const auto make_y = [&](double theta) {
        Series y(n);
        for (std::size_t i = 0; i < n; ++i) {
          y[i] = x[i] + 0.01 * e[i] + ((i < cluster) ? theta : 0.0);
        }
        return y;
      };
      return calibrate_panel(x, make_y, 0.0, 60.0, panel);
    }
    default: {  // constant-x column plus one off-column cluster (10%)
      const std::size_t cluster = n / 10;
      Series x(n), e(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = (i < cluster) ? 1.0 : 0.0;
        e[i] = rng.normal();
      }
      const auto make_y = [&](double theta) {
        Series y(n);
        for (std::size_t i = 0; i < n; ++i) {
          y[i] = (i < cluster) ? theta + 0.05 * e[i] : e[i];
        }
        return y;
      };
      return calibrate_panel(x, make_y, 0.0, 100.0, panel);
    }
  }
}

std::vector<std::uint8_t> gen_binary_markov(double flip_prob, std::size_t n, std::uint64_t seed) {
  if (!(flip_prob > 0.0) || !(flip_prob < 1.0)) {
    throw InvalidParameter("gen_binary_markov: flip_prob must lie in (0, 1)");
  }
  if (n == 0) {
    throw DegenerateInput("gen_binary_markov: empty sequence requested");
  }
  SeededRng rng(seed);
  std::vector<std::uint8_t> s(n);
  s[0] = rng.uniform() < 0.5 ? 0 : 1;
  for (std::size_t i = 1; i < n; ++i) {
    const bool flip = rng.uniform() < flip_prob;
    s[i] = flip ? (1 - s[i - 1]) : s[i - 1];
  }
  return s;
}

double binary_markov_gamma(double flip_prob, int distance) {
  if (!(flip_prob > 0.0) || !(flip_prob < 1.0)) {
    throw InvalidParameter("binary_markov_gamma: flip_prob must lie in (0, 1)");
  }
  if (distance < 0) {
    throw InvalidParameter("binary_markov_gamma: distance must be >= 0");
  }
  return 0.25 * std::pow(1.0 - 2.0 * flip_prob, distance);
}

}  // namespace lindep
