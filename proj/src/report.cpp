#include "lindep/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace lindep {

namespace {

using nlohmann::json;

json lambda_to_json(const LambdaReport& r) {
  json j{
      {"rho", r.rho},
      {"i_xy", r.i_xy},
      {"i_xyprime", r.i_xyprime},
      {"rho_x_yprime", r.rho_x_yprime},
      {"order", r.order},
      {"bins", r.bins},
      {"correction", r.correction},
      {"degenerate", r.degenerate},
      {"clamped", r.clamped},
      {"warnings", r.warnings},
  };
  if (r.degenerate || std::isnan(r.lambda)) {
    j["lambda"] = nullptr;
  } else {
    j["lambda"] = r.lambda;
  }
  return j;
}

json bds_to_json(const BdsResult& b) {
  return json{
      {"statistic", b.statistic}, {"p_value", b.p_value}, {"c1", b.c1},
      {"cm", b.cm},               {"epsilon", b.epsilon}, {"embedding", b.embedding},
      {"warnings", b.warnings},
  };
}

void append_lambda_text(std::ostringstream& out, const LambdaReport& r, const char* indent) {
  out << indent << "order " << r.order << ", bins " << r.bins
      << (r.correction ? ", bias-corrected" : ", uncorrected") << "\n";
  out << indent << "rho        " << r.rho << "\n";
  out << indent << "I(X,Y)     " << r.i_xy << " nats\n";
  out << indent << "I(X,Y')    " << r.i_xyprime << " nats\n";
  if (r.degenerate) {
    out << indent << "lambda     undefined (I below threshold: no measurable dependence)\n";
  } else {
    out << indent << "lambda     " << r.lambda << (r.clamped ? "  [clamped]" : "") << "\n";
  }
  out << indent << "rho(X,Y')  " << r.rho_x_yprime << "\n";
  for (const auto& w : r.warnings) {
    out << indent << "warning: " << w << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out.precision(6);
  out << "input: " << report.provenance.input << " (digest " << report.provenance.digest << ")\n";
  out << "rows: " << report.provenance.rows_used << " used, " << report.provenance.rows_dropped
      << " dropped; columns " << report.provenance.x_column << "," << report.provenance.y_column
      << "\n";
  append_lambda_text(out, report.lambda, "");
  if (!report.profile.empty()) {
    out << "profile:\n";
    for (const auto& r : report.profile) {
      if (r.degenerate) {
        out << "  order " << r.order << ": lambda undefined (degenerate)\n";
      } else {
        out << "  order " << r.order << ": lambda " << r.lambda << "  I' " << r.i_xyprime
            << " nats\n";
      }
    }
  }
  if (report.bds) {
    const auto& b = *report.bds;
    out << "bds: statistic " << b.statistic << ", p " << b.p_value << " (m " << b.embedding
        << ", epsilon " << b.epsilon << ", C1 " << b.c1 << ", Cm " << b.cm << ")\n";
    for (const auto& w : b.warnings) {
      out << "bds warning: " << w << "\n";
    }
  }
  return out.str();
}

std::string render_json(const Report& report) {
  json j{
      {"schema_version", kReportSchemaVersion},
      {"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
      {"provenance",
       json{
           {"input", report.provenance.input},
           {"digest", report.provenance.digest},
           {"seed", report.provenance.seed},
           {"rows_used", report.provenance.rows_used},
           {"rows_dropped", report.provenance.rows_dropped},
           {"x_column", report.provenance.x_column},
           {"y_column", report.provenance.y_column},
       }},
      {"lambda", lambda_to_json(report.lambda)},
  };
  if (report.profile.empty()) {
    j["profile"] = nullptr;
  } else {
    json arr = json::array();
    for (const auto& r : report.profile) arr.push_back(lambda_to_json(r));
    j["profile"] = arr;
  }
  j["bds"] = report.bds ? bds_to_json(*report.bds) : json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace lindep
