#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "slp/corpus.hpp"
#include "slp/sparse.hpp"

namespace slp {

/// Presence indicator: entry (i, j) = 1.0 when command i contains
/// vocab.entries[j] at least once. Out-of-vocabulary tokens are ignored;
/// a command with no vocabulary token yields an empty row.
SparseMatrix encode_onehot(const Corpus& corpus, const Vocabulary& vocab);

/// Term frequency (raw count restricted to the vocabulary) times
/// idf(t) = ln((1 + N) / (1 + df(t))) + 1, then each non-zero row is
/// L2-normalized. All-zero rows stay zero.
SparseMatrix encode_tfidf(const Corpus& corpus, const Vocabulary& vocab);

/// Integer id grid for sequence models: id = 2 + vocabulary position,
/// 1 = unknown token, 0 = padding (only as a right suffix). Commands are
/// truncated to seq_len tokens.
struct LabelMatrix {
  static constexpr std::uint32_t kPad = 0;
  static constexpr std::uint32_t kUnknown = 1;
  static constexpr std::uint32_t kIdOffset = 2;

  std::size_t n_rows = 0;
  std::size_t seq_len = 0;
  std::vector<std::uint32_t> ids;  // row-major, n_rows * seq_len

  std::uint32_t at(std::size_t row, std::size_t pos) const;
};

LabelMatrix encode_label(const Corpus& corpus, const Vocabulary& vocab, std::size_t seq_len = 32);

/// Rows of seq_len space-separated ids, one command per line.
void write_label_rows(const LabelMatrix& m, std::ostream& os);

/// Bridge for feeding the id grid to tabular models: column j holds the
/// id at sequence position j, padding (0) entries are omitted.
SparseMatrix label_matrix_to_sparse(const LabelMatrix& m);

}  // namespace slp
