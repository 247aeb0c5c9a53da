#include "slp/experiment.hpp"

#include <stdexcept>

#include "slp/encoders.hpp"

namespace slp {

const char* to_string(Encoding encoding) {
  switch (encoding) {
    case Encoding::TfIdf: return "tfidf";
    case Encoding::OneHot: return "onehot";
    case Encoding::Label: return "label";
  }
  return "?";
}

ExperimentResult run_experiment(const std::vector<std::string>& benign,
                                const std::vector<std::string>& malicious,
                                const ExperimentConfig& config) {
  if (benign.empty()) throw std::invalid_argument("benign corpus is empty");
  if (malicious.empty()) throw std::invalid_argument("malicious corpus is empty");

  std::vector<std::string> raw;
  raw.reserve(benign.size() + malicious.size());
  raw.insert(raw.end(), benign.begin(), benign.end());
  raw.insert(raw.end(), malicious.begin(), malicious.end());
  std::vector<int> labels(raw.size(), 0);
  for (std::size_t i = benign.size(); i < raw.size(); ++i) labels[i] = 1;

  CorpusBuildResult built = build_corpus(raw, config.normalize, config.tokenizer, config.tlds);
  built.corpus.labels = labels;
  const Vocabulary vocab = top_k_vocabulary(built.counter, config.top_tokens);

  SparseMatrix features;
  switch (config.encoding) {
    case Encoding::TfIdf:
      features = encode_tfidf(built.corpus, vocab);
      break;
    case Encoding::OneHot:
      features = encode_onehot(built.corpus, vocab);
      break;
    case Encoding::Label:
      features = label_matrix_to_sparse(encode_label(built.corpus, vocab, config.seq_len));
      break;
  }

  ExperimentResult result;
  result.vocab_size = vocab.size();
  result.n_benign = benign.size();
  result.n_malicious = malicious.size();

  const GbdtModel model = fit(features, labels, config.gbdt);
  result.full_train = compute_metrics(labels, predict_proba(model, features));
  result.cross_validation = cross_validate(features, labels, config.gbdt, config.folds);
  return result;
}

}  // namespace slp
