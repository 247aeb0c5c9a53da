// End-to-end acceptance checks over the shipped fixture corpus. Each check
// prints exactly one PASS/FAIL line; the exit code is the failure count.
#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <sys/wait.h>
#include <vector>

#include "slp/baselines.hpp"
#include "slp/corpus.hpp"
#include "slp/cross_validation.hpp"
#include "slp/encoders.hpp"
#include "slp/experiment.hpp"
#include "slp/gbdt.hpp"
#include "slp/metrics.hpp"
#include "slp/normalize.hpp"
#include "slp/shell_lexer.hpp"

#include "oracles.hpp"

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& out, bool ok, const std::string& detail) {
  if (!ok && out.ok) {
    out.ok = false;
    out.detail = detail;
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "cannot read %s\n", path.c_str());
    std::exit(2);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> values(const slp::TokenizedCommand& cmd) {
  std::vector<std::string> out;
  for (const auto& token : cmd.tokens) out.push_back(token.value);
  return out;
}

slp::Corpus make_corpus(const std::vector<std::vector<std::string>>& rows) {
  slp::Corpus corpus;
  for (const auto& row : rows) {
    slp::TokenizedCommand cmd;
    for (const auto& value : row) {
      cmd.tokens.push_back({value, slp::TokenKind::Word});
      cmd.raw += cmd.raw.empty() ? value : " " + value;
    }
    corpus.commands.push_back(std::move(cmd));
  }
  return corpus;
}

slp::SparseMatrix dense_to_sparse(const std::vector<std::vector<double>>& x) {
  slp::SparseMatrix m;
  m.n_rows = x.size();
  m.n_cols = x.empty() ? 0 : x[0].size();
  m.rows.resize(m.n_rows);
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    for (std::size_t j = 0; j < x[i].size(); ++j) {
      if (x[i][j] != 0.0) m.rows[i].push_back({j, x[i][j]});
    }
  }
  return m;
}

// --- 1: the documented splits of the three reference commands ------------

Outcome check_golden_tokenization() {
  using slp::TokenKind;
  Outcome out;

  const std::string ex1 = R"(sed 's/^chr//;s/\..* / /' filename)";
  const std::string ex2 = "java -Xms256m -Xmx2048m -jar remoting.jar";
  const std::string ex3 = "export IP=$(dig +short example.com)";

  const std::vector<slp::Token> want1 = {
      {"sed", TokenKind::Word},
      {R"(s/^chr//;s/\..* / /)", TokenKind::Word},
      {"filename", TokenKind::Word},
  };
  const std::vector<slp::Token> want2 = {
      {"java", TokenKind::Word},       {"-Xms256m", TokenKind::Flag},
      {"-Xmx2048m", TokenKind::Flag},  {"-jar", TokenKind::Flag},
      {"remoting.jar", TokenKind::Word},
  };
  const std::vector<slp::Token> want3 = {
      {"export", TokenKind::Word},      {"IP=", TokenKind::Assignment},
      {"$(", TokenKind::SubstitutionOpen},
      {"dig", TokenKind::Word},         {"+short", TokenKind::Flag},
      {"example.com", TokenKind::Word}, {")", TokenKind::SubstitutionClose},
  };

  const auto got1 = slp::tokenize(ex1);
  const auto got2 = slp::tokenize(ex2);
  const auto got3 = slp::tokenize(ex3);
  expect(out, got1.ok() && got1.tokens == want1, "sed example tokens differ");
  expect(out, got2.ok() && got2.tokens == want2, "java example tokens differ");
  expect(out, got3.ok() && got3.tokens == want3, "export example tokens differ");

  const std::vector<std::string> ws1 = {"sed", "'s/^chr//;s/\\..*", "/", "/'", "filename"};
  const std::vector<std::string> wp2 = {"java", "-", "Xms256m",  "-", "Xmx2048m",
                                        "-",    "jar", "remoting", ".", "jar"};
  expect(out, slp::whitespace_tokenize(ex1) == ws1, "whitespace split of sed example differs");
  expect(out, slp::wordpunct_tokenize(ex2) == wp2, "wordpunct split of java example differs");

  // The documented contrasts: whitespace shreds the quoted sed program and
  // glues the substitution, wordpunct shreds every example.
  for (const auto* ex : {&ex1, &ex3}) {
    expect(out, slp::whitespace_tokenize(*ex) != values(slp::tokenize(*ex)),
           "whitespace agrees with shell lexer");
  }
  for (const auto* ex : {&ex1, &ex2, &ex3}) {
    expect(out, slp::wordpunct_tokenize(*ex) != values(slp::tokenize(*ex)),
           "wordpunct agrees with shell lexer");
  }
  return out;
}

// --- 2: encoders against brute-force reference implementations -----------

Outcome check_encoder_equivalence() {
  Outcome out;
  std::mt19937 rng(2024);
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f"};

  for (int trial = 0; trial < 200 && out.ok; ++trial) {
    std::uniform_int_distribution<std::size_t> n_cmds(1, 5);
    std::uniform_int_distribution<std::size_t> n_tokens(0, 8);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

    std::vector<std::vector<std::string>> rows(n_cmds(rng));
    for (auto& row : rows) {
      row.resize(n_tokens(rng));
      for (auto& value : row) value = pool[pick(rng)];
    }
    const auto corpus = make_corpus(rows);

    slp::TokenCounter counter;
    for (const auto& cmd : corpus.commands) counter.add(cmd);
    if (counter.counts.empty()) continue;
    std::uniform_int_distribution<std::size_t> k_dist(1, pool.size());
    const auto vocab = slp::top_k_vocabulary(counter, k_dist(rng));

    const auto onehot = slp::encode_onehot(corpus, vocab);
    const auto want_onehot = oracle::onehot(corpus, vocab);
    for (std::size_t i = 0; i < corpus.commands.size(); ++i) {
      for (std::size_t j = 0; j < vocab.size(); ++j) {
        expect(out, onehot.at(i, j) == want_onehot[i][j], "one-hot entry differs");
      }
    }

    const auto tfidf = slp::encode_tfidf(corpus, vocab);
    const auto want_tfidf = oracle::tfidf(corpus, vocab);
    for (std::size_t i = 0; i < corpus.commands.size(); ++i) {
      for (std::size_t j = 0; j < vocab.size(); ++j) {
        expect(out, std::fabs(tfidf.at(i, j) - want_tfidf[i][j]) <= 1e-9,
               "tf-idf entry off by more than 1e-9");
      }
    }

    std::uniform_int_distribution<std::size_t> len_dist(1, 8);
    const std::size_t seq_len = len_dist(rng);
    const auto labels = slp::encode_label(corpus, vocab, seq_len);
    const auto want_labels = oracle::label_rows(corpus, vocab, seq_len);
    for (std::size_t i = 0; i < corpus.commands.size(); ++i) {
      for (std::size_t j = 0; j < seq_len; ++j) {
        expect(out, labels.at(i, j) == static_cast<std::uint32_t>(want_labels[i][j]),
               "label id differs");
      }
    }
  }
  return out;
}

// --- 3: every non-empty tf-idf row of the fixture matrices is unit norm --

Outcome check_tfidf_row_norms(const std::vector<std::string>& all_lines) {
  Outcome out;
  for (const auto kind :
       {slp::TokenizerKind::Slp, slp::TokenizerKind::WordPunct, slp::TokenizerKind::Whitespace}) {
    const auto build = slp::build_corpus(all_lines, true, kind);
    const auto vocab = slp::top_k_vocabulary(build.counter, 100);
    const auto m = slp::encode_tfidf(build.corpus, vocab);
    for (std::size_t i = 0; i < m.n_rows; ++i) {
      if (m.rows[i].empty()) continue;
      double norm_sq = 0.0;
      for (const auto& entry : m.rows[i]) norm_sq += entry.value * entry.value;
      expect(out, std::fabs(std::sqrt(norm_sq) - 1.0) <= 1e-9,
             "row " + std::to_string(i) + " of " + slp::to_string(kind) + " matrix not unit norm");
    }
  }
  return out;
}

// --- 4: depth-1 splits match exhaustive search; training loss monotone ---

Outcome check_gbdt_training(const std::vector<std::string>& benign,
                            const std::vector<std::string>& malicious) {
  Outcome out;
  std::mt19937 rng(77);

  for (int trial = 0; trial < 100 && out.ok; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(2, 20);
    std::uniform_int_distribution<std::size_t> d_dist(1, 10);
    std::uniform_int_distribution<int> grid(-4, 4);
    std::uniform_int_distribution<int> coin(0, 1);

    const std::size_t n = n_dist(rng);
    const std::size_t d = d_dist(rng);
    std::vector<std::vector<double>> x(n, std::vector<double>(d));
    for (auto& row : x) {
      for (auto& value : row) value = 0.5 * grid(rng);
    }
    std::vector<int> y(n);
    for (auto& label : y) label = coin(rng);
    y[0] = 0;
    y[n - 1] = 1;

    double mean = 0.0;
    for (const int label : y) mean += label;
    mean /= static_cast<double>(n);
    const double prior = std::clamp(mean, 1e-6, 1.0 - 1e-6);
    const double p = slp::sigmoid(std::log(prior / (1.0 - prior)));
    std::vector<double> g(n), h(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = p - y[i];
      h[i] = p * (1.0 - p);
    }

    slp::GbdtParams params;
    params.n_rounds = 1;
    params.max_depth = 1;
    const auto expected = oracle::best_stump(x, g, h, params.l2_lambda, params.min_gain);
    const auto model = slp::fit(dense_to_sparse(x), y, params);
    const auto& root = model.trees[0].nodes[0];
    if (expected.found) {
      expect(out, !root.leaf, "exhaustive search finds a split, training does not");
      if (!root.leaf) {
        expect(out, root.feature == expected.feature, "split feature differs");
        expect(out, root.threshold == expected.threshold, "split threshold differs");
      }
    } else {
      expect(out, root.leaf, "training splits where exhaustive search finds no gain");
    }
  }

  const auto build = slp::build_corpus(benign, true);
  auto corpus = build.corpus;
  std::vector<int> y(benign.size(), 0);
  const auto mal = slp::build_corpus(malicious, true);
  corpus.commands.insert(corpus.commands.end(), mal.corpus.commands.begin(),
                         mal.corpus.commands.end());
  y.insert(y.end(), malicious.size(), 1);
  slp::TokenCounter counter = build.counter;
  counter.merge(mal.counter);
  const auto vocab = slp::top_k_vocabulary(counter, 100);
  const auto x = slp::encode_tfidf(corpus, vocab);

  slp::FitTrace trace;
  slp::fit(x, y, slp::GbdtParams{}, &trace);
  expect(out, trace.train_loss.size() == 100, "expected one loss value per round");
  for (std::size_t r = 1; r < trace.train_loss.size(); ++r) {
    expect(out, trace.train_loss[r] <= trace.train_loss[r - 1],
           "training loss increased at round " + std::to_string(r));
  }
  return out;
}

// --- 5: rank-based AUC equals pairwise counting ---------------------------

Outcome check_auc_equivalence() {
  Outcome out;
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100 && out.ok; ++trial) {
    std::uniform_int_distribution<std::size_t> n_dist(2, 50);
    std::uniform_int_distribution<int> grid(0, 10);
    std::uniform_int_distribution<int> coin(0, 1);

    const std::size_t n = n_dist(rng);
    std::vector<int> y(n);
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = coin(rng);
      scores[i] = 0.1 * grid(rng);
    }
    y[0] = 0;
    y[n - 1] = 1;

    expect(out, slp::auc_score(y, scores) == oracle::pairwise_auc(y, scores),
           "rank-based auc differs from pairwise counting");
  }
  return out;
}

// --- 6: shell-aware tokens beat both baselines on the fixture corpus ------

Outcome check_tokenizer_gap(const std::vector<std::string>& benign,
                            const std::vector<std::string>& malicious) {
  Outcome out;
  slp::ExperimentConfig config;

  auto run = [&](slp::TokenizerKind kind) {
    config.tokenizer = kind;
    return slp::run_experiment(benign, malicious, config).cross_validation;
  };
  const auto shell = run(slp::TokenizerKind::Slp);
  const auto wordpunct = run(slp::TokenizerKind::WordPunct);
  const auto whitespace = run(slp::TokenizerKind::Whitespace);

  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "cv f1 slp=%.3f wordpunct=%.3f whitespace=%.3f, recall slp=%.3f wp=%.3f ws=%.3f",
                shell.f1, wordpunct.f1, whitespace.f1, shell.recall, wordpunct.recall,
                whitespace.recall);
  const std::string scores(buffer);

  expect(out, shell.f1 >= wordpunct.f1 + 0.1, "f1 margin over wordpunct too small: " + scores);
  expect(out, shell.f1 >= whitespace.f1 + 0.1, "f1 margin over whitespace too small: " + scores);
  expect(out, shell.recall > wordpunct.recall, "recall not above wordpunct: " + scores);
  expect(out, shell.recall > whitespace.recall, "recall not above whitespace: " + scores);
  return out;
}

// --- 7: the experiment command is byte-deterministic -----------------------

std::string capture_stdout(const std::string& command, int& exit_code) {
  std::string output;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return output;
  }
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return output;
}

Outcome check_cli_determinism(const std::string& data_dir, const std::string& cli) {
  Outcome out;
  const std::string command = "'" + cli + "' experiment --benign '" + data_dir +
                              "/benign.txt' --malicious '" + data_dir +
                              "/malicious.txt' --all-tokenizers";
  int code1 = 0;
  int code2 = 0;
  const auto first = capture_stdout(command, code1);
  const auto second = capture_stdout(command, code2);
  expect(out, code1 == 0 && code2 == 0, "experiment command failed");
  expect(out, !first.empty(), "experiment produced no output");
  expect(out, first == second, "two identical runs produced different bytes");
  return out;
}

// --- 8: normalization is idempotent and leaves only the placeholder quad --

bool is_dotted_quad(std::string_view run) {
  std::size_t part = 0;
  std::size_t digits = 0;
  int value = 0;
  for (const char c : run) {
    if (c == '.') {
      if (digits == 0 || value > 255) return false;
      ++part;
      digits = 0;
      value = 0;
    } else {
      if (++digits > 3) return false;
      value = value * 10 + (c - '0');
    }
  }
  return part == 3 && digits > 0 && value <= 255;
}

Outcome check_normalization(const std::vector<std::string>& all_lines) {
  Outcome out;
  for (const auto& line : all_lines) {
    const auto once = slp::normalize(line);
    expect(out, slp::normalize(once) == once, "not idempotent on: " + line);

    std::size_t i = 0;
    while (i < once.size()) {
      if (std::isdigit(static_cast<unsigned char>(once[i])) == 0 && once[i] != '.') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < once.size() &&
             (std::isdigit(static_cast<unsigned char>(once[j])) != 0 || once[j] == '.')) {
        ++j;
      }
      const auto run = std::string_view(once).substr(i, j - i);
      expect(out, !is_dotted_quad(run) || run == "1.1.1.1",
             "dotted quad survived normalization: " + once);
      i = j;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: acceptance <data-dir> <cli-path>\n");
    return 2;
  }
  const std::string data_dir = argv[1];
  const std::string cli = argv[2];

  const auto benign = read_lines(data_dir + "/benign.txt");
  const auto malicious = read_lines(data_dir + "/malicious.txt");
  auto all_lines = benign;
  all_lines.insert(all_lines.end(), malicious.begin(), malicious.end());

  struct Check {
    const char* name;
    double budget_seconds;  // 0 = no budget
    std::function<Outcome()> fn;
  };
  const std::vector<Check> checks = {
      {"golden tokenization", 1.0, check_golden_tokenization},
      {"encoder equivalence", 10.0, check_encoder_equivalence},
      {"tf-idf row norms", 0.0, [&] { return check_tfidf_row_norms(all_lines); }},
      {"boosted-tree splits and loss", 30.0, [&] { return check_gbdt_training(benign, malicious); }},
      {"auc equivalence", 0.0, check_auc_equivalence},
      {"tokenizer quality gap", 60.0, [&] { return check_tokenizer_gap(benign, malicious); }},
      {"cli determinism", 0.0, [&] { return check_cli_determinism(data_dir, cli); }},
      {"normalization idempotence", 0.0, [&] { return check_normalization(all_lines); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = checks[i].fn();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && checks[i].budget_seconds > 0.0 && seconds >= checks[i].budget_seconds) {
      outcome.ok = false;
      char buffer[80];
      std::snprintf(buffer, sizeof(buffer), "took %.2fs, budget %.0fs", seconds,
                    checks[i].budget_seconds);
      outcome.detail = buffer;
    }
    std::printf("%s  %zu  %s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL", i + 1, checks[i].name,
                seconds, outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
    failures += outcome.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
