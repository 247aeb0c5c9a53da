#include "slp/encoders.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

namespace slp {
namespace {

// Per-row counts of in-vocabulary tokens, keyed by column (ascending).
std::map<std::size_t, double> vocab_counts(const TokenizedCommand& command,
                                           const Vocabulary& vocab) {
  std::map<std::size_t, double> counts;
  for (const auto& token : command.tokens) {
    if (const auto col = vocab.lookup(token.value)) counts[*col] += 1.0;
  }
  return counts;
}

}  // namespace

SparseMatrix encode_onehot(const Corpus& corpus, const Vocabulary& vocab) {
  if (vocab.size() == 0) throw std::invalid_argument("vocabulary is empty");
  SparseMatrix m;
  m.n_rows = corpus.commands.size();
  m.n_cols = vocab.size();
  m.rows.resize(m.n_rows);
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    for (const auto& [col, count] : vocab_counts(corpus.commands[i], vocab)) {
      (void)count;
      m.rows[i].push_back({col, 1.0});
    }
  }
  return m;
}

SparseMatrix encode_tfidf(const Corpus& corpus, const Vocabulary& vocab) {
  if (vocab.size() == 0) throw std::invalid_argument("vocabulary is empty");
  if (corpus.commands.empty()) throw std::invalid_argument("corpus is empty");
  const std::size_t n = corpus.commands.size();

  std::vector<double> idf(vocab.size(), 0.0);
  {
    std::vector<std::uint64_t> df(vocab.size(), 0);
    for (const auto& command : corpus.commands) {
      for (const auto& [col, count] : vocab_counts(command, vocab)) {
        (void)count;
        ++df[col];
      }
    }
    for (std::size_t j = 0; j < vocab.size(); ++j) {
      idf[j] = std::log((1.0 + static_cast<double>(n)) / (1.0 + static_cast<double>(df[j]))) + 1.0;
    }
  }

  SparseMatrix m;
  m.n_rows = n;
  m.n_cols = vocab.size();
  m.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = m.rows[i];
    double norm_sq = 0.0;
    for (const auto& [col, count] : vocab_counts(corpus.commands[i], vocab)) {
      const double value = count * idf[col];
      row.push_back({col, value});
      norm_sq += value * value;
    }
    if (norm_sq > 0.0) {
      const double inv_norm = 1.0 / std::sqrt(norm_sq);
      for (auto& entry : row) entry.value *= inv_norm;
    }
  }
  return m;
}

std::uint32_t LabelMatrix::at(std::size_t row, std::size_t pos) const {
  return ids.at(row * seq_len + pos);
}

LabelMatrix encode_label(const Corpus& corpus, const Vocabulary& vocab, std::size_t seq_len) {
  if (seq_len == 0) throw std::invalid_argument("sequence length must be at least 1");
  LabelMatrix m;
  m.n_rows = corpus.commands.size();
  m.seq_len = seq_len;
  m.ids.assign(m.n_rows * seq_len, LabelMatrix::kPad);
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    const auto& tokens = corpus.commands[i].tokens;
    const std::size_t take = std::min(seq_len, tokens.size());
    for (std::size_t k = 0; k < take; ++k) {
      const auto col = vocab.lookup(tokens[k].value);
      m.ids[i * seq_len + k] =
          col ? LabelMatrix::kIdOffset + static_cast<std::uint32_t>(*col) : LabelMatrix::kUnknown;
    }
  }
  return m;
}

void write_label_rows(const LabelMatrix& m, std::ostream& os) {
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    for (std::size_t k = 0; k < m.seq_len; ++k) {
      if (k > 0) os << ' ';
      os << m.ids[i * m.seq_len + k];
    }
    os << '\n';
  }
}

SparseMatrix label_matrix_to_sparse(const LabelMatrix& m) {
  SparseMatrix out;
  out.n_rows = m.n_rows;
  out.n_cols = m.seq_len;
  out.rows.resize(m.n_rows);
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    for (std::size_t k = 0; k < m.seq_len; ++k) {
      const std::uint32_t id = m.ids[i * m.seq_len + k];
      if (id != LabelMatrix::kPad) out.rows[i].push_back({k, static_cast<double>(id)});
    }
  }
  return out;
}

}  // namespace slp
