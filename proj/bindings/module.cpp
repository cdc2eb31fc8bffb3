#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "lindep/bds.hpp"
#include "lindep/datagen.hpp"
#include "lindep/experiments.hpp"
#include "lindep/info.hpp"
#include "lindep/lambda.hpp"
#include "lindep/stats.hpp"

namespace py = pybind11;
using namespace lindep;

namespace {

LambdaConfig make_config(std::optional<int> bins, int order, bool correction, double mm_divisor,
                         double min_information, bool symmetric) {
  LambdaConfig config;
  config.bins = bins;
  config.model_order = order;
  config.correction = correction;
  config.mm_divisor = mm_divisor;
  config.min_information = min_information;
  config.symmetric = symmetric;
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mutual-information decomposition of linear vs nonlinear dependence";

  py::register_exception<Error>(m, "LindepError", PyExc_RuntimeError);

  py::class_<PairedSample>(m, "PairedSample")
      .def(py::init<Series, Series>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &PairedSample::x)
      .def_readonly("y", &PairedSample::y)
      .def("__len__", &PairedSample::size);

  py::class_<RegressionFit>(m, "RegressionFit")
      .def_readonly("order", &RegressionFit::order)
      .def_readonly("offset", &RegressionFit::offset)
      .def_readonly("centered_coefficients", &RegressionFit::centered_coefficients)
      .def_readonly("fitted", &RegressionFit::fitted)
      .def_readonly("residuals", &RegressionFit::residuals)
      .def("coefficients", &RegressionFit::coefficients);

  py::class_<DiscretizedSeries>(m, "DiscretizedSeries")
      .def_readonly("labels", &DiscretizedSeries::labels)
      .def_readonly("bin_count", &DiscretizedSeries::bin_count)
      .def_readonly("boundaries", &DiscretizedSeries::boundaries)
      .def("bin_counts", &DiscretizedSeries::bin_counts)
      .def("__len__", &DiscretizedSeries::size);

  py::class_<JointHistogram>(m, "JointHistogram")
      .def_readonly("rows", &JointHistogram::rows)
      .def_readonly("cols", &JointHistogram::cols)
      .def_readonly("counts", &JointHistogram::counts)
      .def_readonly("n", &JointHistogram::n)
      .def("at", &JointHistogram::at)
      .def("row_sums", &JointHistogram::row_sums)
      .def("col_sums", &JointHistogram::col_sums);

  py::class_<EntropyEstimate>(m, "EntropyEstimate")
      .def_readonly("value", &EntropyEstimate::value)
      .def_readonly("nonempty_bins", &EntropyEstimate::nonempty_bins)
      .def_readonly("corrected", &EntropyEstimate::corrected)
      .def_readonly("n", &EntropyEstimate::n);

  py::class_<LambdaReport>(m, "LambdaReport")
      .def_readonly("rho", &LambdaReport::rho)
      .def_readonly("i_xy", &LambdaReport::i_xy)
      .def_readonly("i_xyprime", &LambdaReport::i_xyprime)
      .def_readonly("lambda_", &LambdaReport::lambda)
      .def_readonly("rho_x_yprime", &LambdaReport::rho_x_yprime)
      .def_readonly("order", &LambdaReport::order)
      .def_readonly("bins", &LambdaReport::bins)
      .def_readonly("correction", &LambdaReport::correction)
      .def_readonly("degenerate", &LambdaReport::degenerate)
      .def_readonly("clamped", &LambdaReport::clamped)
      .def_readonly("warnings", &LambdaReport::warnings);

  py::class_<BdsResult>(m, "BdsResult")
      .def_readonly("statistic", &BdsResult::statistic)
      .def_readonly("p_value", &BdsResult::p_value)
      .def_readonly("c1", &BdsResult::c1)
      .def_readonly("cm", &BdsResult::cm)
      .def_readonly("epsilon", &BdsResult::epsilon)
      .def_readonly("embedding", &BdsResult::embedding)
      .def_readonly("warnings", &BdsResult::warnings);

  // core statistics
  m.def("mean", [](const Series& s) { return mean(s); });
  m.def("sample_variance", [](const Series& s) { return sample_variance(s); });
  m.def("covariance", [](const Series& x, const Series& y) { return covariance(x, y); });
  m.def("pearson", [](const Series& x, const Series& y) { return pearson(x, y); });
  m.def("spearman", [](const Series& x, const Series& y) { return spearman(x, y); });
  m.def("midranks", [](const Series& s) { return midranks(s); });
  m.def(
      "fit_polynomial",
      [](const Series& x, const Series& y, int order) {
        return fit_polynomial(PairedSample(x, y), order);
      },
      py::arg("x"), py::arg("y"), py::arg("order") = 1);

  // information estimators
  m.def("equal_frequency_bins",
        [](const Series& s, int bins) { return equal_frequency_bins(s, bins); });
  m.def(
      "plugin_entropy",
      [](const std::vector<std::int64_t>& counts, std::int64_t n) {
        return plugin_entropy(counts, n);
      },
      py::arg("counts"), py::arg("n"));
  m.def("miller_madow", &miller_madow, py::arg("estimate"),
        py::arg("divisor") = kMillerMadowDivisor);
  m.def("joint_histogram", &joint_histogram);
  m.def("mutual_information", &mutual_information, py::arg("dx"), py::arg("dy"),
        py::arg("correction") = true, py::arg("divisor") = kMillerMadowDivisor);
  m.def(
      "mutual_information_binned",
      [](const Series& x, const Series& y, std::optional<int> bins, bool correction,
         double divisor) {
        const int m_bins = bins ? *bins : default_bin_count(x.size());
        return mutual_information(equal_frequency_bins(x, m_bins),
                                  equal_frequency_bins(y, m_bins), correction, divisor);
      },
      py::arg("x"), py::arg("y"), py::arg("bins") = std::nullopt, py::arg("correction") = true,
      py::arg("divisor") = kMillerMadowDivisor);
  m.def("gaussian_mi", &gaussian_mi);
  m.def("binary_correlation_function",
        [](const std::vector<std::uint8_t>& seq, int distance) {
          return binary_correlation_function(seq, distance);
        });
  m.def("binary_mi_approx", &binary_mi_approx, py::arg("gamma"), py::arg("p0"), py::arg("p1"));

  // the Lambda pipeline
  m.def("default_bin_count", &default_bin_count);
  m.def("quantile_transform",
        [](const Series& y, const Series& z) { return quantile_transform(y, z); });
  m.def(
      "compute_lambda",
      [](const Series& x, const Series& y, std::optional<int> bins, int order, bool correction,
         double mm_divisor, double min_information, bool symmetric) {
        return compute_lambda(PairedSample(x, y), make_config(bins, order, correction, mm_divisor,
                                                              min_information, symmetric));
      },
      py::arg("x"), py::arg("y"), py::arg("bins") = std::nullopt, py::arg("order") = 1,
      py::arg("correction") = true, py::arg("mm_divisor") = kMillerMadowDivisor,
      py::arg("min_information") = 0.01, py::arg("symmetric") = false);
  m.def(
      "lambda_profile",
      [](const Series& x, const Series& y, int max_order, std::optional<int> bins, bool correction,
         double mm_divisor, double min_information) {
        return lambda_profile(
            PairedSample(x, y),
            make_config(bins, 1, correction, mm_divisor, min_information, false), max_order);
      },
      py::arg("x"), py::arg("y"), py::arg("max_order") = 3, py::arg("bins") = std::nullopt,
      py::arg("correction") = true, py::arg("mm_divisor") = kMillerMadowDivisor,
      py::arg("min_information") = 0.01);

  // BDS test
  m.def("correlation_integral",
        [](const Series& s, int embedding, double epsilon) {
          return correlation_integral(s, embedding, epsilon);
        });
  m.def(
      "bds_statistic",
      [](const Series& s, int embedding, double eta, bool eta_absolute) {
        BdsConfig config;
        config.embedding = embedding;
        config.eta = eta;
        config.eta_absolute = eta_absolute;
        return bds_statistic(s, config);
      },
      py::arg("s"), py::arg("embedding") = 2, py::arg("eta") = 0.5,
      py::arg("eta_absolute") = false);
  m.def(
      "residuals_sorted_by_x",
      [](const Series& x, const Series& y, int fit_order) {
        return residuals_sorted_by_x(PairedSample(x, y), fit_order);
      },
      py::arg("x"), py::arg("y"), py::arg("fit_order") = 1);

  // seeded generators
  m.def("inverse_normal_cdf", &inverse_normal_cdf);
  m.def(
      "gen_bivariate_normal",
      [](double rho, std::size_t n, std::uint64_t seed) {
        auto s = gen_bivariate_normal(rho, n, seed);
        return py::make_tuple(std::move(s.x), std::move(s.y));
      },
      py::arg("rho"), py::arg("n"), py::arg("seed"));
  m.def(
      "gen_polynomial",
      [](double a, int order, std::size_t n, std::uint64_t seed) {
        auto s = gen_polynomial(a, order, n, seed);
        return py::make_tuple(std::move(s.x), std::move(s.y));
      },
      py::arg("a"), py::arg("order"), py::arg("n"), py::arg("seed"));
  m.def(
      "gen_exponential",
      [](std::size_t n, std::uint64_t seed, double noise_scale) {
        auto s = gen_exponential(n, seed, noise_scale);
        return py::make_tuple(std::move(s.x), std::move(s.y));
      },
      py::arg("n"), py::arg("seed"), py::arg("noise_scale") = kExponentialNoiseScale);
  m.def(
      "gen_anscombe_like",
      [](int panel, std::size_t n, std::uint64_t seed) {
        auto s = gen_anscombe_like(panel, n, seed);
        return py::make_tuple(std::move(s.x), std::move(s.y));
      },
      py::arg("panel"), py::arg("n"), py::arg("seed"));
  m.def("gen_binary_markov", &gen_binary_markov, py::arg("flip_prob"), py::arg("n"),
        py::arg("seed"));
  m.def("binary_markov_gamma", &binary_markov_gamma, py::arg("flip_prob"), py::arg("distance"));

  m.attr("MILLER_MADOW_DIVISOR") = kMillerMadowDivisor;
  m.attr("EXPONENTIAL_NOISE_SCALE") = kExponentialNoiseScale;
  m.attr("__version__") = "0.1.0";
}
