#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slp/corpus.hpp"
#include "slp/cross_validation.hpp"
#include "slp/gbdt.hpp"
#include "slp/metrics.hpp"

namespace slp {

enum class Encoding { TfIdf, OneHot, Label };

const char* to_string(Encoding encoding);

struct ExperimentConfig {
  TokenizerKind tokenizer = TokenizerKind::Slp;
  Encoding encoding = Encoding::TfIdf;
  std::size_t top_tokens = 100;
  std::size_t seq_len = 32;
  std::size_t folds = 10;
  bool normalize = true;
  GbdtParams gbdt;
  std::vector<std::string> tlds = default_tlds();
};

struct ExperimentResult {
  Metrics full_train;       // fit and evaluated on the whole corpus
  Metrics cross_validation; // mean over folds
  std::size_t vocab_size = 0;
  std::size_t n_benign = 0;
  std::size_t n_malicious = 0;
};

/// End-to-end run on a labeled two-class corpus: tokenize (normalizing
/// first unless disabled), build the top-k vocabulary, encode, train the
/// boosted-tree classifier and score it both on the training corpus and
/// with stratified k-fold cross-validation. Benign commands get label 0,
/// malicious ones label 1.
ExperimentResult run_experiment(const std::vector<std::string>& benign,
                                const std::vector<std::string>& malicious,
                                const ExperimentConfig& config);

}  // namespace slp
