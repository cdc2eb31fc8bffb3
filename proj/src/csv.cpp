#include "lindep/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace lindep {

namespace {

std::string trim(std::string_view cell) {
  const auto* begin = cell.data();
  const auto* end = cell.data() + cell.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
  return std::string(begin, end);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool parse_double(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (*first == '+') ++first;  // from_chars rejects an explicit plus
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

int resolve_column(const ColumnSelector& sel, const std::vector<std::string>& header,
                   bool had_header, const char* which) {
  if (sel.index) {
    if (*sel.index < 0) {
      throw ParseError(std::string("column selector for ") + which + " is negative");
    }
    return *sel.index;
  }
  if (!had_header) {
    throw ParseError(std::string("column '") + sel.name + "' requested for " + which +
                     " but the file has no header row");
  }
  const auto it = std::find(header.begin(), header.end(), sel.name);
  if (it == header.end()) {
    throw ParseError(std::string("column '") + sel.name + "' not found in header");
  }
  return static_cast<int>(it - header.begin());
}

}  // namespace

ColumnSelector ColumnSelector::parse(const std::string& token) {
  ColumnSelector sel;
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    sel.index = std::stoi(token);
  } else {
    sel.name = token;
  }
  return sel;
}

CsvData read_paired_csv(std::istream& in, const ColumnSelector& cx, const ColumnSelector& cy) {
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split_row(line));
  }
  if (rows.empty()) {
    throw ParseError("input contains no data rows");
  }

  CsvData data;
  // Header detection: the first row is a header when any cell is non-numeric.
  double probe;
  data.had_header = std::any_of(rows.front().begin(), rows.front().end(),
                                [&](const std::string& cell) { return !parse_double(cell, probe); });
  std::size_t first_data = 0;
  if (data.had_header) {
    data.header = rows.front();
    first_data = 1;
  }

  const int ix = resolve_column(cx, data.header, data.had_header, "x");
  const int iy = resolve_column(cy, data.header, data.had_header, "y");
  data.x_column = cx.index ? std::to_string(*cx.index) : cx.name;
  data.y_column = cy.index ? std::to_string(*cy.index) : cy.name;

  Series x, y;
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    double vx, vy;
    if (static_cast<std::size_t>(ix) >= cells.size() ||
        static_cast<std::size_t>(iy) >= cells.size() || !parse_double(cells[ix], vx) ||
        !parse_double(cells[iy], vy) || !std::isfinite(vx) || !std::isfinite(vy)) {
      ++data.rows_dropped;
      continue;
    }
    x.push_back(vx);
    y.push_back(vy);
  }
  if (x.size() < 3) {
    throw DegenerateInput("need at least 3 usable rows, got " + std::to_string(x.size()) +
                          " (" + std::to_string(data.rows_dropped) + " dropped)");
  }
  data.sample = PairedSample(std::move(x), std::move(y));
  return data;
}

CsvData read_paired_csv_file(const std::filesystem::path& path, const ColumnSelector& cx,
                             const ColumnSelector& cy) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  return read_paired_csv(in, cx, cy);
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_paired_csv(std::ostream& out, const PairedSample& sample) {
  out << "x,y\n";
  for (std::size_t i = 0; i < sample.size(); ++i) {
    out << format_double(sample.x[i]) << ',' << format_double(sample.y[i]) << '\n';
  }
}

void write_binary_csv(std::ostream& out, std::span<const std::uint8_t> seq) {
  out << "s\n";
  for (std::uint8_t v : seq) {
    out << static_cast<int>(v) << '\n';
  }
}

std::uint64_t fnv1a64(std::span<const char> bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string digest_string(const std::string& text) {
  const std::uint64_t h = fnv1a64(std::span<const char>(text.data(), text.size()));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string digest_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for digest");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return digest_string(buffer.str());
}

}  // namespace lindep
