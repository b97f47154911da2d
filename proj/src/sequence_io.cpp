#include "lieeq/sequence_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lieeq/error.hpp"

namespace lieeq {

namespace {

constexpr std::string_view kMagic = "# lieeq-sequence v1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
  std::string where = "line " + std::to_string(line);
  if (column > 0) where += ", column " + std::to_string(column);
  throw Error(ErrorKind::ParseError, where + ": " + msg);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_sequence_csv(std::ostream& os, const ClassSequence& seq) {
  os << kMagic << " group=" << to_string(seq.group) << " provenance=" << to_string(seq.provenance)
     << " n=" << seq.points.size();
  if (seq.seed) os << " seed=" << *seq.seed;
  if (!seq.rng.empty()) os << " rng=" << seq.rng;
  os << '\n';
  const int r = seq.points.empty() ? 0 : seq.points.front().rank();
  for (int j = 0; j < r; ++j) os << (j ? "," : "") << "theta" << (j + 1);
  os << '\n';
  for (const auto& p : seq.points) {
    for (int j = 0; j < p.rank(); ++j) os << (j ? "," : "") << format_double(p[static_cast<std::size_t>(j)]);
    os << '\n';
  }
}

std::string sequence_to_csv(const ClassSequence& seq) {
  std::ostringstream os;
  write_sequence_csv(os, seq);
  return os.str();
}

ClassSequence read_sequence_csv(std::istream& is) {
  ClassSequence seq;
  std::string raw;
  std::size_t line_no = 0;

  if (!std::getline(is, raw)) fail(1, 0, "empty input; expected a '" + std::string(kMagic) + "' header");
  ++line_no;
  std::string_view header = trim(raw);
  if (header.substr(0, kMagic.size()) != kMagic) {
    fail(line_no, 1, "missing '" + std::string(kMagic) + "' header");
  }
  bool have_group = false;
  std::istringstream tokens{std::string(header.substr(kMagic.size()))};
  std::string tok;
  while (tokens >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) fail(line_no, 0, "header token '" + tok + "' is not key=value");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "group") {
      const auto g = parse_group(val);
      if (!g) fail(line_no, 0, "unknown group '" + val + "'");
      seq.group = *g;
      have_group = true;
    } else if (key == "provenance") {
      const auto p = parse_provenance(val);
      if (!p) fail(line_no, 0, "unknown provenance '" + val + "'");
      seq.provenance = *p;
    } else if (key == "seed") {
      std::uint64_t s = 0;
      const auto res = std::from_chars(val.data(), val.data() + val.size(), s);
      if (res.ec != std::errc{} || res.ptr != val.data() + val.size()) fail(line_no, 0, "bad seed '" + val + "'");
      seq.seed = s;
    } else if (key == "rng") {
      seq.rng = val;
    }
  }
  if (!have_group) fail(line_no, 0, "header lacks group=<label>");
  const int rank = build_tables(seq.group).rank;

  if (!std::getline(is, raw)) fail(line_no + 1, 0, "missing column header line");
  ++line_no;
  {
    std::string_view cols = trim(raw);
    int count = cols.empty() ? 0 : 1;
    for (char c : cols) count += c == ',';
    if (count != rank) {
      fail(line_no, 0, "column header names " + std::to_string(count) + " columns, group " +
                           std::string(to_string(seq.group)) + " needs " + std::to_string(rank));
    }
  }

  std::vector<double> theta(static_cast<std::size_t>(rank));
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view row = trim(raw);
    if (row.empty() || row.front() == '#') continue;
    std::size_t column = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = row.find(',', start);
      const std::string_view cell = trim(row.substr(start, comma == std::string_view::npos ? row.size() - start : comma - start));
      ++column;
      if (column > static_cast<std::size_t>(rank)) {
        fail(line_no, column, "too many columns (expected " + std::to_string(rank) + ")");
      }
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
        fail(line_no, column, "'" + std::string(cell) + "' is not a number");
      }
      if (!std::isfinite(v)) fail(line_no, column, "value is not finite");
      theta[column - 1] = v;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (column != static_cast<std::size_t>(rank)) {
      fail(line_no, column, "too few columns (expected " + std::to_string(rank) + ")");
    }
    seq.points.emplace_back(theta);
  }
  if (seq.points.empty()) fail(line_no, 0, "sequence has no rows");
  return seq;
}

ClassSequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open sequence file '" + path + "'");
  try {
    return read_sequence_csv(in);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, path + ": " + e.detail());
  }
}

}  // namespace lieeq
