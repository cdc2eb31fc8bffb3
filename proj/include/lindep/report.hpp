#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindep/bds.hpp"
#include "lindep/lambda.hpp"

namespace lindep {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolName = "lindep";
inline constexpr const char* kToolVersion = "0.1.0";

struct Provenance {
  std::string input;   // file path, "-" for stdin, or a generator description
  std::string digest;  // fnv1a-64 hex of the input bytes (or generator string)
  std::uint64_t seed = 0;
  std::size_t rows_used = 0;
  std::size_t rows_dropped = 0;
  std::string x_column;
  std::string y_column;
};

/// Full analysis output: the Lambda decomposition, an optional per-order
/// profile, and an optional BDS test on the fit residuals.
struct Report {
  Provenance provenance;
  LambdaReport lambda;
  std::vector<LambdaReport> profile;  // empty unless a profile was requested
  std::optional<BdsResult> bds;
};

std::string render_text(const Report& report);

/// Serializes against docs/report.schema.json (closed field set, versioned).
std::string render_json(const Report& report);

}  // namespace lindep
