#pragma once

#include "proshrink/boxset.hpp"
#include "proshrink/experiments.hpp"
#include "proshrink/linalg.hpp"
#include "proshrink/solvers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace proshrink::io {

// Text formats (all decimals written with 17 significant digits so values
// round-trip exactly):
//   matrix  CSV, one row per matrix row, comma-separated
//   vector  one value per line
//   box     one line per coordinate: "<lower> <upper>", endpoints a decimal
//           literal or -inf/inf
//   trace   CSV, header iter,primal_feas,fixed_point,dual_value
//   sweep   CSV, header s,trials,recovered_proshrink,recovered_lbreg,
//           rate_proshrink,rate_lbreg

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line,
             const std::string& message);
};

Matrix load_matrix_csv(const std::string& path);
Vector load_vector(const std::string& path);
BoxSet load_box(const std::string& path);

void save_matrix_csv(const std::string& path, const Matrix& A);
void save_vector(const std::string& path, const Vector& v);
void save_box(const std::string& path, const BoxSet& X);
void save_trace_csv(const std::string& path,
                    const std::vector<HistoryRow>& rows);
void save_sweep_csv(const std::string& path, const SweepReport& report);

// 17-significant-digit decimal; infinities print as inf/-inf.
std::string format_full(double v);

}  // namespace proshrink::io
