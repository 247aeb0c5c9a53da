#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slp/normalize.hpp"
#include "slp/token.hpp"

namespace slp {

enum class TokenizerKind { Slp, WordPunct, Whitespace };

const char* to_string(TokenizerKind kind);

/// Tokenizes `raw` with the selected tokenizer. Baseline tokenizers fill
/// TokenizedCommand with all kinds = Word and never warn.
TokenizedCommand tokenize_with(std::string_view raw, TokenizerKind kind);

struct Corpus {
  std::vector<TokenizedCommand> commands;
  std::vector<int> labels;  // empty when unlabeled, else one 0/1 per command
};

/// Multiset of token values. Values map to their total multiplicity.
struct TokenCounter {
  std::map<std::string, std::uint64_t> counts;

  void add(const TokenizedCommand& command);
  void merge(const TokenCounter& other);
  std::uint64_t count(const std::string& token) const;
};

/// (token, count) pairs sorted by count descending, ties by ascending
/// lexicographic byte order.
std::vector<std::pair<std::string, std::uint64_t>> sorted_counts(const TokenCounter& counter);

/// Counter dump: UTF-8 lines of "token<TAB>count" in sorted_counts order.
std::string counter_to_tsv(const TokenCounter& counter);

struct Vocabulary {
  std::vector<std::string> entries;                      // index -> token
  std::unordered_map<std::string, std::size_t> index;    // token -> index

  std::size_t size() const { return entries.size(); }
  std::optional<std::size_t> lookup(std::string_view token) const;
};

/// Top-k tokens by count, ties by ascending byte order. k must be >= 1;
/// fewer than k distinct tokens yield a smaller vocabulary.
Vocabulary top_k_vocabulary(const TokenCounter& counter, std::size_t k);

struct CorpusBuildResult {
  Corpus corpus;
  TokenCounter counter;
  std::vector<std::size_t> warning_rows;  // indices of commands with lexer warnings
};

/// Tokenizes every command (normalizing first when `use_normalization`)
/// and accumulates the token counter. Lexer warnings never drop a row;
/// affected row indices are reported instead.
CorpusBuildResult build_corpus(const std::vector<std::string>& raw_commands,
                               bool use_normalization,
                               TokenizerKind tokenizer = TokenizerKind::Slp,
                               const std::vector<std::string>& tlds = default_tlds());

}  // namespace slp
