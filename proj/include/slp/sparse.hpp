#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace slp {

struct SparseEntry {
  std::size_t col = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Row-major sparse matrix: each row lists (col, value) entries with
/// strictly increasing columns and no explicit zeros.
struct SparseMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::vector<SparseEntry>> rows;

  double at(std::size_t row, std::size_t col) const;
  std::vector<double> dense_row(std::size_t row) const;
};

/// New matrix holding the given rows (in the given order), same width.
SparseMatrix select_rows(const SparseMatrix& m, const std::vector<std::size_t>& indices);

/// svmlight/libsvm text: one row per line, "<label> <col+1>:<value> ..."
/// with ascending 1-based columns and values printed with 9 significant
/// digits. An empty `labels` writes label 0 for every row.
void write_svmlight(const SparseMatrix& m, const std::vector<int>& labels, std::ostream& os);
std::string to_svmlight(const SparseMatrix& m, const std::vector<int>& labels);

}  // namespace slp
