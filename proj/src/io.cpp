#include "proshrink/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace proshrink::io {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& msg) {
  throw ParseError(path, line, msg);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  return out;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

// Parses one numeric token; allow_inf admits -inf/inf endpoints.
double parse_number(const std::string& token, const std::string& path,
                    std::size_t line, bool allow_inf) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    fail(path, line, "malformed number '" + token + "'");
  if (std::isnan(v)) fail(path, line, "NaN is not a valid value");
  if (!allow_inf && std::isinf(v))
    fail(path, line, "non-finite value '" + token + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

ParseError::ParseError(const std::string& path, std::size_t line,
                       const std::string& message)
    : std::runtime_error(line == 0 ? path + ": " + message
                                   : path + ":" + std::to_string(line) + ": " +
                                         message) {}

std::string format_full(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Matrix load_matrix_csv(const std::string& path) {
  auto in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      row.push_back(parse_number(trim(cell), path, lineno, false));
    if (!rows.empty() && row.size() != rows.front().size())
      fail(path, lineno,
           "row has " + std::to_string(row.size()) + " columns, expected " +
               std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(path, 0, "empty matrix file");
  Matrix A(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      A(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
  return A;
}

Vector load_vector(const std::string& path) {
  auto in = open_in(path);
  std::vector<double> vals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    vals.push_back(parse_number(trim(line), path, lineno, false));
  }
  if (vals.empty()) fail(path, 0, "empty vector file");
  Vector v(static_cast<long>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<long>(i)] = vals[i];
  return v;
}

BoxSet load_box(const std::string& path) {
  auto in = open_in(path);
  std::vector<Interval> intervals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::stringstream ss(line);
    std::string lo_tok, hi_tok, extra;
    if (!(ss >> lo_tok >> hi_tok))
      fail(path, lineno, "expected two endpoints per line");
    if (ss >> extra) fail(path, lineno, "trailing token '" + extra + "'");
    const double lo = parse_number(lo_tok, path, lineno, true);
    const double hi = parse_number(hi_tok, path, lineno, true);
    try {
      intervals.emplace_back(lo, hi);
    } catch (const std::invalid_argument& e) {
      fail(path, lineno, e.what());
    }
  }
  if (intervals.empty()) fail(path, 0, "empty box file");
  return BoxSet(std::move(intervals));
}

void save_matrix_csv(const std::string& path, const Matrix& A) {
  auto out = open_out(path);
  for (long i = 0; i < A.rows(); ++i) {
    for (long j = 0; j < A.cols(); ++j) {
      if (j) out << ',';
      out << format_full(A(i, j));
    }
    out << '\n';
  }
}

void save_vector(const std::string& path, const Vector& v) {
  auto out = open_out(path);
  for (long i = 0; i < v.size(); ++i) out << format_full(v[i]) << '\n';
}

void save_box(const std::string& path, const BoxSet& X) {
  auto out = open_out(path);
  for (const Interval& I : X)
    out << format_full(I.lower()) << ' ' << format_full(I.upper()) << '\n';
}

void save_trace_csv(const std::string& path,
                    const std::vector<HistoryRow>& rows) {
  auto out = open_out(path);
  out << "iter,primal_feas,fixed_point,dual_value\n";
  for (const HistoryRow& r : rows)
    out << r.iter << ',' << format_full(r.primal_feas) << ','
        << format_full(r.fixed_point) << ',' << format_full(r.dual_value)
        << '\n';
}

void save_sweep_csv(const std::string& path, const SweepReport& report) {
  auto out = open_out(path);
  out << "s,trials,recovered_proshrink,recovered_lbreg,rate_proshrink,rate_lbreg\n";
  for (const SweepRow& r : report.rows)
    out << r.s << ',' << r.trials << ',' << r.recovered_proshrink << ','
        << r.recovered_lbreg << ',' << format_full(r.rate_proshrink) << ','
        << format_full(r.rate_lbreg) << '\n';
}

}  // namespace proshrink::io
