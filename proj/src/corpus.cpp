#include "slp/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "slp/baselines.hpp"
#include "slp/shell_lexer.hpp"

namespace slp {

const char* to_string(TokenizerKind kind) {
  switch (kind) {
    case TokenizerKind::Slp: return "slp";
    case TokenizerKind::WordPunct: return "wordpunct";
    case TokenizerKind::Whitespace: return "whitespace";
  }
  return "?";
}

TokenizedCommand tokenize_with(std::string_view raw, TokenizerKind kind) {
  if (kind == TokenizerKind::Slp) return tokenize(raw);
  TokenizedCommand out;
  out.raw.assign(raw);
  const std::vector<std::string> values = kind == TokenizerKind::WordPunct
                                              ? wordpunct_tokenize(raw)
                                              : whitespace_tokenize(raw);
  out.tokens.reserve(values.size());
  for (const auto& value : values) out.tokens.push_back(Token{value, TokenKind::Word});
  return out;
}

void TokenCounter::add(const TokenizedCommand& command) {
  for (const auto& token : command.tokens) ++counts[token.value];
}

void TokenCounter::merge(const TokenCounter& other) {
  for (const auto& [token, count] : other.counts) counts[token] += count;
}

std::uint64_t TokenCounter::count(const std::string& token) const {
  const auto it = counts.find(token);
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, std::uint64_t>> sorted_counts(const TokenCounter& counter) {
  std::vector<std::pair<std::string, std::uint64_t>> pairs(counter.counts.begin(),
                                                           counter.counts.end());
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return pairs;
}

std::string counter_to_tsv(const TokenCounter& counter) {
  std::string out;
  for (const auto& [token, count] : sorted_counts(counter)) {
    out += token;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

std::optional<std::size_t> Vocabulary::lookup(std::string_view token) const {
  const auto it = index.find(std::string(token));
  return it == index.end() ? std::nullopt : std::optional<std::size_t>(it->second);
}

Vocabulary top_k_vocabulary(const TokenCounter& counter, std::size_t k) {
  if (k == 0) throw std::invalid_argument("vocabulary size must be at least 1");
  Vocabulary vocab;
  const auto pairs = sorted_counts(counter);
  const std::size_t take = std::min(k, pairs.size());
  vocab.entries.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    vocab.entries.push_back(pairs[i].first);
    vocab.index.emplace(pairs[i].first, i);
  }
  return vocab;
}

CorpusBuildResult build_corpus(const std::vector<std::string>& raw_commands,
                               bool use_normalization,
                               TokenizerKind tokenizer,
                               const std::vector<std::string>& tlds) {
  CorpusBuildResult result;
  result.corpus.commands.reserve(raw_commands.size());
  for (std::size_t i = 0; i < raw_commands.size(); ++i) {
    const std::string& raw = raw_commands[i];
    TokenizedCommand command = use_normalization
                                   ? tokenize_with(normalize(raw, tlds), tokenizer)
                                   : tokenize_with(raw, tokenizer);
    if (!command.ok()) result.warning_rows.push_back(i);
    result.counter.add(command);
    result.corpus.commands.push_back(std::move(command));
  }
  return result;
}

}  // namespace slp
