#include "slp/sparse.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace slp {

double SparseMatrix::at(std::size_t row, std::size_t col) const {
  for (const auto& entry : rows.at(row)) {
    if (entry.col == col) return entry.value;
    if (entry.col > col) break;
  }
  return 0.0;
}

std::vector<double> SparseMatrix::dense_row(std::size_t row) const {
  std::vector<double> out(n_cols, 0.0);
  for (const auto& entry : rows.at(row)) out[entry.col] = entry.value;
  return out;
}

SparseMatrix select_rows(const SparseMatrix& m, const std::vector<std::size_t>& indices) {
  SparseMatrix out;
  out.n_rows = indices.size();
  out.n_cols = m.n_cols;
  out.rows.reserve(indices.size());
  for (const auto i : indices) out.rows.push_back(m.rows.at(i));
  return out;
}

void write_svmlight(const SparseMatrix& m, const std::vector<int>& labels, std::ostream& os) {
  if (!labels.empty() && labels.size() != m.n_rows) {
    throw std::invalid_argument("label count does not match row count");
  }
  char buffer[64];
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    os << (labels.empty() ? 0 : labels[i]);
    for (const auto& entry : m.rows[i]) {
      std::snprintf(buffer, sizeof buffer, "%.9g", entry.value);
      os << ' ' << entry.col + 1 << ':' << buffer;
    }
    os << '\n';
  }
}

std::string to_svmlight(const SparseMatrix& m, const std::vector<int>& labels) {
  std::ostringstream os;
  write_svmlight(m, labels, os);
  return os.str();
}

}  // namespace slp
