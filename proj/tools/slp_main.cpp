#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slp/corpus.hpp"
#include "slp/encoders.hpp"
#include "slp/experiment.hpp"
#include "slp/normalize.hpp"

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<int> read_labels(const std::string& path) {
  std::vector<int> labels;
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    if (line == "0") labels.push_back(0);
    else if (line == "1") labels.push_back(1);
    else throw std::runtime_error("labels must be 0 or 1, got: " + line);
  }
  return labels;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

slp::TokenizerKind parse_tokenizer(const std::string& name) {
  if (name == "slp") return slp::TokenizerKind::Slp;
  if (name == "wordpunct") return slp::TokenizerKind::WordPunct;
  return slp::TokenizerKind::Whitespace;
}

slp::Encoding parse_encoding(const std::string& name) {
  if (name == "tfidf") return slp::Encoding::TfIdf;
  if (name == "onehot") return slp::Encoding::OneHot;
  return slp::Encoding::Label;
}

struct CommonOptions {
  std::string tokenizer = "slp";
  bool no_normalize = false;
  std::string tld_list;

  std::vector<std::string> tlds() const {
    return tld_list.empty() ? slp::default_tlds() : slp::load_tld_list(tld_list);
  }
};

void report_warnings(const slp::CorpusBuildResult& built) {
  for (const auto row : built.warning_rows) {
    for (const auto warning : built.corpus.commands[row].warnings) {
      std::cerr << "warning: line " << row + 1 << ": " << slp::to_string(warning) << "\n";
    }
  }
}

int cmd_tokenize(const std::string& input, const CommonOptions& common,
                 const std::string& counter_path) {
  const auto lines = read_lines(input);
  const auto built = slp::build_corpus(lines, !common.no_normalize,
                                       parse_tokenizer(common.tokenizer), common.tlds());
  report_warnings(built);
  std::ostringstream out;
  for (const auto& command : built.corpus.commands) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& token : command.tokens) row.push_back(token.value);
    out << row.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
  }
  std::cout << out.str();
  if (!counter_path.empty()) write_file(counter_path, slp::counter_to_tsv(built.counter));
  return 0;
}

int cmd_encode(const std::string& input, const std::string& labels_path,
               const std::string& encoding_name, std::size_t top_tokens, std::size_t seq_len,
               const std::string& out_path, const std::string& vocab_path,
               const CommonOptions& common) {
  const auto lines = read_lines(input);
  std::vector<int> labels;
  if (!labels_path.empty()) {
    labels = read_labels(labels_path);
    if (labels.size() != lines.size()) {
      throw std::runtime_error("label count (" + std::to_string(labels.size()) +
                               ") does not match command count (" +
                               std::to_string(lines.size()) + ")");
    }
  }

  std::string payload;
  std::string vocab_payload;
  if (!lines.empty()) {
    const auto built = slp::build_corpus(lines, !common.no_normalize,
                                         parse_tokenizer(common.tokenizer), common.tlds());
    report_warnings(built);
    const slp::Vocabulary vocab = slp::top_k_vocabulary(built.counter, top_tokens);
    for (const auto& entry : vocab.entries) {
      vocab_payload += entry;
      vocab_payload += '\n';
    }

    const slp::Encoding encoding = parse_encoding(encoding_name);
    std::ostringstream os;
    if (encoding == slp::Encoding::Label) {
      slp::write_label_rows(slp::encode_label(built.corpus, vocab, seq_len), os);
    } else {
      const slp::SparseMatrix m = encoding == slp::Encoding::TfIdf
                                      ? slp::encode_tfidf(built.corpus, vocab)
                                      : slp::encode_onehot(built.corpus, vocab);
      slp::write_svmlight(m, labels, os);
    }
    payload = os.str();
  }

  if (out_path.empty()) std::cout << payload;
  else write_file(out_path, payload);
  if (!vocab_path.empty()) write_file(vocab_path, vocab_payload);
  return 0;
}

void print_result_rows(const std::string& tokenizer, const std::string& encoding,
                       std::size_t folds, const slp::ExperimentResult& result) {
  const auto row = [&](const char* evaluation, const slp::Metrics& m) {
    std::printf("%-10s  %-8s  %-10s  %-8.6f  %-8.6f  %-9.6f  %-8.6f\n", tokenizer.c_str(),
                encoding.c_str(), evaluation, m.auc, m.f1, m.precision, m.recall);
  };
  row("full-train", result.full_train);
  const std::string cv = "cv-" + std::to_string(folds);
  row(cv.c_str(), result.cross_validation);
}

int cmd_experiment(const std::string& benign_path, const std::string& malicious_path,
                   bool all_tokenizers, const std::string& encoding_name, std::size_t folds,
                   std::size_t rounds, std::size_t depth, std::size_t top_tokens,
                   std::size_t seq_len, const CommonOptions& common) {
  const auto benign = read_lines(benign_path);
  const auto malicious = read_lines(malicious_path);

  slp::ExperimentConfig config;
  config.encoding = parse_encoding(encoding_name);
  config.top_tokens = top_tokens;
  config.seq_len = seq_len;
  config.folds = folds;
  config.normalize = !common.no_normalize;
  config.gbdt.n_rounds = rounds;
  config.gbdt.max_depth = depth;
  config.tlds = common.tlds();

  std::vector<slp::TokenizerKind> tokenizers;
  if (all_tokenizers) {
    tokenizers = {slp::TokenizerKind::Slp, slp::TokenizerKind::WordPunct,
                  slp::TokenizerKind::Whitespace};
  } else {
    tokenizers = {parse_tokenizer(common.tokenizer)};
  }

  std::printf("%-10s  %-8s  %-10s  %-8s  %-8s  %-9s  %-8s\n", "tokenizer", "encoding",
              "evaluation", "auc", "f1", "precision", "recall");
  for (const auto tokenizer : tokenizers) {
    config.tokenizer = tokenizer;
    const slp::ExperimentResult result = slp::run_experiment(benign, malicious, config);
    std::cerr << slp::to_string(tokenizer) << ": " << result.n_benign << " benign, "
              << result.n_malicious << " malicious, vocabulary " << result.vocab_size << "\n";
    print_result_rows(slp::to_string(tokenizer), encoding_name, folds, result);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shell command tokenization, encoding and classification toolkit"};
  app.require_subcommand(1);

  CommonOptions common;
  const auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--tokenizer", common.tokenizer, "tokenizer: slp, wordpunct or whitespace")
        ->check(CLI::IsMember({"slp", "wordpunct", "whitespace"}));
    sub->add_flag("--no-normalize", common.no_normalize,
                  "skip IP and domain normalization before tokenizing");
    sub->add_option("--tld-list", common.tld_list,
                    "file with one top-level domain per line, replaces the built-in list");
  };

  std::string input, counter_path;
  CLI::App* tokenize = app.add_subcommand("tokenize", "tokenize commands, one JSON array per line");
  tokenize->add_option("--input", input, "file with one command per line")->required();
  tokenize->add_option("--counter", counter_path, "write token counts as TSV to this file");
  add_common(tokenize);

  std::string labels_path, encoding_name, out_path, vocab_path;
  std::size_t top_tokens = 100, seq_len = 32;
  CLI::App* encode = app.add_subcommand("encode", "encode commands as feature vectors");
  encode->add_option("--input", input, "file with one command per line")->required();
  encode->add_option("--labels", labels_path, "file with one 0/1 label per line");
  encode->add_option("--encoding", encoding_name, "encoding: tfidf, onehot or label")
      ->required()
      ->check(CLI::IsMember({"tfidf", "onehot", "label"}));
  encode->add_option("--top-tokens", top_tokens, "vocabulary size")->check(CLI::PositiveNumber);
  encode->add_option("--seq-len", seq_len, "sequence length for label encoding")
      ->check(CLI::PositiveNumber);
  encode->add_option("--out", out_path, "output file (default: stdout)");
  encode->add_option("--vocab", vocab_path, "write the vocabulary, one token per line");
  add_common(encode);

  std::string benign_path, malicious_path;
  bool all_tokenizers = false;
  std::size_t folds = 10, rounds = 100, depth = 3;
  encoding_name = "tfidf";
  CLI::App* experiment =
      app.add_subcommand("experiment", "train and evaluate a benign/malicious classifier");
  experiment->add_option("--benign", benign_path, "file of benign commands")->required();
  experiment->add_option("--malicious", malicious_path, "file of malicious commands")->required();
  experiment->add_flag("--all-tokenizers", all_tokenizers,
                       "compare slp, wordpunct and whitespace tokenizers");
  experiment->add_option("--encoding", encoding_name, "encoding: tfidf, onehot or label")
      ->check(CLI::IsMember({"tfidf", "onehot", "label"}));
  experiment->add_option("--folds", folds, "cross-validation folds")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  experiment->add_option("--rounds", rounds, "boosting rounds")->check(CLI::PositiveNumber);
  experiment->add_option("--depth", depth, "maximum tree depth")->check(CLI::PositiveNumber);
  experiment->add_option("--top-tokens", top_tokens, "vocabulary size")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seq-len", seq_len, "sequence length for label encoding")
      ->check(CLI::PositiveNumber);
  add_common(experiment);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tokenize->parsed()) return cmd_tokenize(input, common, counter_path);
    if (encode->parsed()) {
      return cmd_encode(input, labels_path, encoding_name, top_tokens, seq_len, out_path,
                        vocab_path, common);
    }
    return cmd_experiment(benign_path, malicious_path, all_tokenizers, encoding_name, folds,
                          rounds, depth, top_tokens, seq_len, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
