#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lindep/csv.hpp"
#include "lindep/datagen.hpp"
#include "lindep/experiments.hpp"
#include "lindep/report.hpp"

namespace {

using lindep::BdsConfig;
using lindep::ColumnSelector;
using lindep::LambdaConfig;
using lindep::PairedSample;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDegenerate = 2;

struct GenOptions {
  std::string family;
  std::size_t n = 10000;
  std::uint64_t seed = 1;
  double rho = 0.6;
  double a = 0.0;
  int gen_order = 2;
  double noise_scale = lindep::kExponentialNoiseScale;
  double flip_prob = 0.45;

  std::string describe() const {
    std::ostringstream out;
    out << "family=" << family << ";n=" << n << ";seed=" << seed;
    if (family == "bivariate_normal") out << ";rho=" << lindep::format_double(rho);
    if (family == "polynomial")
      out << ";a=" << lindep::format_double(a) << ";order=" << gen_order;
    if (family == "exponential") out << ";noise_scale=" << lindep::format_double(noise_scale);
    if (family == "binary_markov") out << ";flip_prob=" << lindep::format_double(flip_prob);
    return out.str();
  }
};

PairedSample generate_pair(const GenOptions& gen) {
  if (gen.family == "bivariate_normal") {
    return lindep::gen_bivariate_normal(gen.rho, gen.n, gen.seed);
  }
  if (gen.family == "polynomial") {
    return lindep::gen_polynomial(gen.a, gen.gen_order, gen.n, gen.seed);
  }
  if (gen.family == "exponential") {
    return lindep::gen_exponential(gen.n, gen.seed, gen.noise_scale);
  }
  if (gen.family.rfind("anscombe", 0) == 0 && gen.family.size() == 9) {
    return lindep::gen_anscombe_like(gen.family[8] - '0', gen.n, gen.seed);
  }
  throw lindep::InvalidParameter("unknown paired generator family '" + gen.family + "'");
}

void add_gen_flags(CLI::App* cmd, GenOptions& gen, bool require_family) {
  auto* fam = cmd->add_option("--family", gen.family,
                              "generator family: bivariate_normal, polynomial, exponential, "
                              "anscombe1..anscombe4, binary_markov");
  if (require_family) fam->required();
  cmd->add_option("--n", gen.n, "sample size")->capture_default_str();
  cmd->add_option("--rho", gen.rho, "bivariate_normal correlation")->capture_default_str();
  cmd->add_option("--a", gen.a, "polynomial nonlinearity coefficient")->capture_default_str();
  cmd->add_option("--gen-order", gen.gen_order, "polynomial generator order (2 or 3)")
      ->capture_default_str();
  cmd->add_option("--noise-scale", gen.noise_scale, "exponential generator noise scale")
      ->capture_default_str();
  cmd->add_option("--flip-prob", gen.flip_prob, "binary_markov flip probability")
      ->capture_default_str();
}

struct AnalyzeOptions {
  std::string input;
  std::string columns = "0,1";
  int bins = 0;  // 0: auto rule
  int order = 1;
  bool no_correction = false;
  double mm_divisor = lindep::kMillerMadowDivisor;
  double min_information = 0.01;
  bool symmetric = false;
  int max_order = 0;  // 0: no profile
  int bds_m = 2;
  double bds_eta = 0.5;
  bool bds_eta_absolute = false;
  bool no_bds = false;
  std::string format = "text";
  std::uint64_t seed = 0;
  GenOptions gen;
};

LambdaConfig make_lambda_config(const AnalyzeOptions& opt) {
  LambdaConfig config;
  if (opt.bins > 0) config.bins = opt.bins;
  config.model_order = opt.order;
  config.correction = !opt.no_correction;
  config.mm_divisor = opt.mm_divisor;
  config.min_information = opt.min_information;
  config.symmetric = opt.symmetric;
  return config;
}

int run_analyze(const AnalyzeOptions& opt) {
  lindep::Report report;
  PairedSample sample;

  if (!opt.gen.family.empty()) {
    sample = generate_pair(opt.gen);
    report.provenance.input = opt.gen.describe();
    report.provenance.digest = lindep::digest_string(report.provenance.input);
    report.provenance.seed = opt.gen.seed;
    report.provenance.x_column = "x";
    report.provenance.y_column = "y";
  } else {
    const auto comma = opt.columns.find(',');
    if (comma == std::string::npos) {
      throw lindep::ParseError("--columns expects two comma-separated selectors");
    }
    const ColumnSelector cx = ColumnSelector::parse(opt.columns.substr(0, comma));
    const ColumnSelector cy = ColumnSelector::parse(opt.columns.substr(comma + 1));
    lindep::CsvData data;
    if (opt.input == "-") {
      data = lindep::read_paired_csv(std::cin, cx, cy);
      std::ostringstream echo;
      lindep::write_paired_csv(echo, data.sample);
      report.provenance.digest = lindep::digest_string(echo.str());
    } else {
      data = lindep::read_paired_csv_file(opt.input, cx, cy);
      report.provenance.digest = lindep::digest_file(opt.input);
    }
    report.provenance.input = opt.input;
    report.provenance.seed = opt.seed;
    report.provenance.rows_dropped = data.rows_dropped;
    report.provenance.x_column = data.x_column;
    report.provenance.y_column = data.y_column;
    sample = std::move(data.sample);
  }
  report.provenance.rows_used = sample.size();

  const LambdaConfig config = make_lambda_config(opt);
  report.lambda = lindep::compute_lambda(sample, config);
  if (opt.max_order > 0) {
    report.profile = lindep::lambda_profile(sample, config, opt.max_order);
  }
  if (!opt.no_bds) {
    BdsConfig bds;
    bds.embedding = opt.bds_m;
    bds.eta = opt.bds_eta;
    bds.eta_absolute = opt.bds_eta_absolute;
    report.bds = lindep::bds_statistic(lindep::residuals_sorted_by_x(sample, opt.order), bds);
  }

  if (opt.format == "json") {
    std::cout << lindep::render_json(report);
  } else {
    std::cout << lindep::render_text(report);
  }
  return report.lambda.degenerate ? kExitDegenerate : kExitOk;
}

struct GenerateOptions {
  GenOptions gen;
  std::string output = "-";
};

int run_generate(const GenerateOptions& opt) {
  std::ostringstream body;
  if (opt.gen.family == "binary_markov") {
    const auto seq = lindep::gen_binary_markov(opt.gen.flip_prob, opt.gen.n, opt.gen.seed);
    lindep::write_binary_csv(body, seq);
  } else {
    lindep::write_paired_csv(body, generate_pair(opt.gen));
  }
  if (opt.output == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
      throw lindep::IoError("cannot open '" + opt.output + "' for writing");
    }
    out << body.str();
  }
  return kExitOk;
}

struct CrossoverOptions {
  int order = 2;
  double a_start = 0.0;
  double a_step = 0.02;
  double a_max = 0.5;
  bool full_sweep = false;
  int seeds = 20;
  std::size_t n = 10000;
  std::uint64_t seed = 1;
  int bins = 0;
  bool no_correction = false;
  int bds_m = 2;
  double bds_eta = 0.5;
  bool bds_eta_absolute = false;
  std::string format = "text";
};

int run_crossover_cmd(const CrossoverOptions& opt) {
  lindep::CrossoverGrid grid;
  grid.a_start = opt.a_start;
  grid.a_step = opt.a_step;
  grid.a_max = opt.a_max;
  grid.stop_at_crossover = !opt.full_sweep;

  LambdaConfig lambda_config;
  if (opt.bins > 0) lambda_config.bins = opt.bins;
  lambda_config.correction = !opt.no_correction;

  BdsConfig bds_config;
  bds_config.embedding = opt.bds_m;
  bds_config.eta = opt.bds_eta;
  bds_config.eta_absolute = opt.bds_eta_absolute;

  const lindep::CrossoverResult result =
      lindep::run_crossover(opt.order, grid, opt.seeds, opt.n, lambda_config, bds_config, opt.seed);

  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : result.rows) {
      rows.push_back({{"a", row.a},
                      {"mean_lambda", row.mean_lambda},
                      {"mean_statistic", row.mean_statistic},
                      {"rejection_fraction", row.rejection_fraction},
                      {"seeds", row.seeds}});
    }
    nlohmann::json j{{"order", result.order}, {"rows", rows}};
    j["crossover_a"] = result.crossover_a ? nlohmann::json(*result.crossover_a) : nullptr;
    j["lambda_at_crossover"] =
        result.lambda_at_crossover ? nlohmann::json(*result.lambda_at_crossover) : nullptr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "      a  mean_lambda  mean_stat  reject_frac\n";
    for (const auto& row : result.rows) {
      std::printf("%7.3f  %11.4f  %9.3f  %11.2f\n", row.a, row.mean_lambda, row.mean_statistic,
                  row.rejection_fraction);
    }
    if (result.crossover_a) {
      std::cout << "crossover: a = " << *result.crossover_a
                << ", lambda = " << *result.lambda_at_crossover << "\n";
    } else {
      std::cout << "crossover: not reached within the grid\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-dependence decomposition of mutual information, with a BDS residual test"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a CSV file (or generated data)");
  analyze_cmd->add_option("input", analyze.input, "CSV path, or - for stdin");
  analyze_cmd->add_option("--columns", analyze.columns, "two selectors: indices or header names")
      ->capture_default_str();
  analyze_cmd->add_option("--bins", analyze.bins, "bin count (0 = auto rule)")
      ->capture_default_str();
  analyze_cmd->add_option("--order", analyze.order, "fitted polynomial order")
      ->capture_default_str();
  analyze_cmd->add_flag("--no-correction", analyze.no_correction, "disable the entropy bias correction");
  analyze_cmd->add_option("--mm-divisor", analyze.mm_divisor,
                          "divisor in the (m-1)/(divisor*N) correction term")
      ->capture_default_str();
  analyze_cmd->add_option("--min-information", analyze.min_information,
                          "I(X,Y) below this is reported as degenerate")
      ->capture_default_str();
  analyze_cmd->add_flag("--symmetric", analyze.symmetric,
                        "fit both directions and report the smaller lambda");
  analyze_cmd->add_option("--max-order", analyze.max_order,
                          "also report a lambda profile for orders 1..K");
  analyze_cmd->add_option("--bds-m", analyze.bds_m, "BDS embedding dimension")
      ->capture_default_str();
  analyze_cmd->add_option("--bds-eta", analyze.bds_eta, "BDS distance threshold")
      ->capture_default_str();
  analyze_cmd->add_flag("--bds-eta-absolute", analyze.bds_eta_absolute,
                        "treat --bds-eta as absolute instead of sd-relative");
  analyze_cmd->add_flag("--no-bds", analyze.no_bds, "skip the BDS residual test");
  analyze_cmd->add_option("--format", analyze.format, "text or json")->capture_default_str();
  analyze_cmd->add_option("--seed", analyze.seed, "seed echoed into provenance");
  add_gen_flags(analyze_cmd, analyze.gen, false);

  GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "write a generated CSV dataset");
  add_gen_flags(generate_cmd, generate.gen, true);
  generate_cmd->add_option("--seed", generate.gen.seed, "generator seed")->capture_default_str();
  generate_cmd->add_option("-o,--output", generate.output, "output path, - for stdout")
      ->capture_default_str();

  CrossoverOptions crossover;
  auto* crossover_cmd =
      app.add_subcommand("crossover", "sweep the polynomial nonlinearity coefficient against BDS");
  crossover_cmd->add_option("--order", crossover.order, "generator order: 2 or 3")
      ->capture_default_str();
  crossover_cmd->add_option("--a-start", crossover.a_start, "grid start")->capture_default_str();
  crossover_cmd->add_option("--a-step", crossover.a_step, "grid step")->capture_default_str();
  crossover_cmd->add_option("--a-max", crossover.a_max, "grid end")->capture_default_str();
  crossover_cmd->add_flag("--full-sweep", crossover.full_sweep,
                          "sweep the whole grid instead of stopping at the crossover");
  crossover_cmd->add_option("--seeds", crossover.seeds, "seed ensemble size")
      ->capture_default_str();
  crossover_cmd->add_option("--n", crossover.n, "sample size per run")->capture_default_str();
  crossover_cmd->add_option("--seed", crossover.seed, "seed base")->capture_default_str();
  crossover_cmd->add_option("--bins", crossover.bins, "bin count (0 = auto rule)")
      ->capture_default_str();
  crossover_cmd->add_flag("--no-correction", crossover.no_correction,
                          "disable the entropy bias correction");
  crossover_cmd->add_option("--bds-m", crossover.bds_m, "BDS embedding dimension")
      ->capture_default_str();
  crossover_cmd->add_option("--bds-eta", crossover.bds_eta, "BDS distance threshold")
      ->capture_default_str();
  crossover_cmd->add_flag("--bds-eta-absolute", crossover.bds_eta_absolute,
                          "treat --bds-eta as absolute instead of sd-relative");
  crossover_cmd->add_option("--format", crossover.format, "text or json")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      if (analyze.input.empty() && analyze.gen.family.empty()) {
        std::cerr << "error: analyze needs an input path or --family\n";
        return kExitError;
      }
      return run_analyze(analyze);
    }
    if (generate_cmd->parsed()) {
      return run_generate(generate);
    }
    return run_crossover_cmd(crossover);
  } catch (const lindep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitError;
  }
}
