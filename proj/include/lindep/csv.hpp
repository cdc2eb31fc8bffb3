#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lindep/types.hpp"

namespace lindep {

/// A column reference: a 0-based index, or a name resolved against the header.
struct ColumnSelector {
  std::optional<int> index;
  std::string name;

  static ColumnSelector parse(const std::string& token);
};

struct CsvData {
  PairedSample sample;
  std::size_t rows_dropped = 0;  // rows with missing/non-numeric/non-finite cells
  bool had_header = false;
  std::vector<std::string> header;
  std::string x_column;  // resolved selector, for reporting
  std::string y_column;
};

/// Reads two numeric columns. The first non-empty line is treated as a header
/// when any of its cells fails to parse as a number; rows whose selected
/// cells are missing or non-numeric are dropped and counted. Requires at
/// least 3 usable rows.
CsvData read_paired_csv(std::istream& in, const ColumnSelector& cx, const ColumnSelector& cy);
CsvData read_paired_csv_file(const std::filesystem::path& path, const ColumnSelector& cx,
                             const ColumnSelector& cy);

/// Writes "x,y" rows with shortest round-trip number formatting, so parsing
/// the file reproduces the doubles bit for bit.
void write_paired_csv(std::ostream& out, const PairedSample& sample);

/// Writes a single "s" column of 0/1 symbols.
void write_binary_csv(std::ostream& out, std::span<const std::uint8_t> seq);

std::string format_double(double v);

std::uint64_t fnv1a64(std::span<const char> bytes);
std::string digest_string(const std::string& text);
std::string digest_file(const std::filesystem::path& path);

}  // namespace lindep
