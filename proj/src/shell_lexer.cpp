#include "slp/shell_lexer.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace slp {
namespace {

constexpr int kMaxSubstitutionDepth = 128;

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9');
}

// Length of a NAME= prefix of s, 0 when there is none.
std::size_t assignment_prefix(std::string_view s) {
  if (s.empty() || !is_name_start(s[0])) return 0;
  std::size_t i = 1;
  while (i < s.size() && is_name_char(s[i])) ++i;
  if (i < s.size() && s[i] == '=') return i + 1;
  return 0;
}

struct OperatorSpec {
  std::string_view text;
  bool word_start_only;  // fd-2 redirects only count at the start of a word
};

// Longest match first.
constexpr std::array<OperatorSpec, 12> kOperators{{
    {"2>&1", true},
    {"2>>", true},
    {"||", false},
    {"&&", false},
    {">>", false},
    {"<<", false},
    {"2>", true},
    {"|", false},
    {"&", false},
    {";", false},
    {"<", false},
    {">", false},
}};

std::size_t match_operator(std::string_view src, std::size_t pos, bool word_start) {
  const std::string_view rest = src.substr(pos);
  for (const auto& op : kOperators) {
    if (op.word_start_only && !word_start) continue;
    if (rest.starts_with(op.text)) return op.text.size();
  }
  return 0;
}

struct LexResult {
  std::vector<Token> tokens;
  std::vector<LexWarning> warnings;
};

LexResult lex(std::string_view src, int depth);

class Lexer {
 public:
  Lexer(std::string_view src, int depth) : src_(src), depth_(depth) {}

  LexResult run() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (is_blank(c)) {
        flush_word();
        ++pos_;
      } else if (c == '\'') {
        scan_single_quoted();
      } else if (c == '"') {
        scan_double_quoted();
      } else if (c == '\\') {
        scan_escape();
      } else if (c == '$' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '(') {
        scan_dollar_substitution();
      } else if (c == '`') {
        scan_backtick_substitution();
      } else if (const std::size_t len = match_operator(src_, pos_, word_.empty())) {
        flush_word();
        emit(std::string(src_.substr(pos_, len)), TokenKind::Operator);
        pos_ += len;
      } else {
        append(c, /*literal=*/false);
        ++pos_;
      }
    }
    flush_word();
    return LexResult{std::move(tokens_), std::move(warnings_)};
  }

 private:
  // Literal appends (quoted or escaped characters) end the unquoted prefix
  // that flag and assignment classification looks at.
  void append(char c, bool literal) {
    if (literal) {
      prefix_open_ = false;
    } else if (prefix_open_) {
      ++unquoted_prefix_;
    }
    word_.push_back(c);
  }

  void enter_literal_span() { prefix_open_ = false; }

  void emit(std::string value, TokenKind kind) {
    tokens_.push_back(Token{std::move(value), kind});
  }

  void warn(LexWarning warning) {
    if (std::find(warnings_.begin(), warnings_.end(), warning) == warnings_.end()) {
      warnings_.push_back(warning);
    }
  }

  void flush_word() {
    if (word_.empty()) {
      unquoted_prefix_ = 0;
      prefix_open_ = true;
      return;
    }
    TokenKind kind = TokenKind::Word;
    if (unquoted_prefix_ > 0 && (word_[0] == '-' || word_[0] == '+')) {
      kind = TokenKind::Flag;
    } else if (const std::size_t len = assignment_prefix(word_);
               len > 0 && len <= unquoted_prefix_) {
      kind = TokenKind::Assignment;
    }
    emit(std::move(word_), kind);
    word_.clear();
    unquoted_prefix_ = 0;
    prefix_open_ = true;
  }

  void scan_single_quoted() {
    enter_literal_span();
    ++pos_;  // opening quote
    while (pos_ < src_.size() && src_[pos_] != '\'') {
      append(src_[pos_], true);
      ++pos_;
    }
    if (pos_ == src_.size()) {
      warn(LexWarning::UnbalancedQuote);
    } else {
      ++pos_;  // closing quote
    }
  }

  void scan_double_quoted() {
    enter_literal_span();
    ++pos_;  // opening quote
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '"') {
        ++pos_;
        return;
      }
      if (c == '\\' && pos_ + 1 < src_.size()) {
        const char next = src_[pos_ + 1];
        if (next == '"' || next == '\\' || next == '$' || next == '`') {
          append(next, true);
          pos_ += 2;
          continue;
        }
        append('\\', true);  // backslash stays literal before other characters
        ++pos_;
        continue;
      }
      if (c == '$' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '(') {
        scan_dollar_substitution();
        continue;
      }
      if (c == '`') {
        scan_backtick_substitution();
        continue;
      }
      append(c, true);
      ++pos_;
    }
    warn(LexWarning::UnbalancedQuote);
  }

  void scan_escape() {
    if (pos_ + 1 < src_.size()) {
      append(src_[pos_ + 1], true);
      pos_ += 2;
    } else {
      append('\\', true);  // dangling backslash at end of input
      ++pos_;
    }
  }

  // Splices the recursively lexed body of a substitution into the output.
  void splice_substitution_body(std::string_view inner) {
    if (inner.empty()) return;
    if (depth_ >= kMaxSubstitutionDepth) {
      // Pathologically deep nesting: keep the body as one word rather
      // than recursing further.
      emit(std::string(inner), TokenKind::Word);
      return;
    }
    LexResult sub = lex(inner, depth_ + 1);
    for (auto& token : sub.tokens) tokens_.push_back(std::move(token));
    for (const auto warning : sub.warnings) warn(warning);
  }

  void scan_dollar_substitution() {
    flush_word();
    emit("$(", TokenKind::SubstitutionOpen);
    pos_ += 2;
    const std::size_t start = pos_;
    std::size_t depth = 1;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        pos_ += 2;
      } else if (c == '\'') {
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '\'') ++pos_;
        if (pos_ < src_.size()) ++pos_;
      } else if (c == '"') {
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) pos_ += 2;
          else ++pos_;
        }
        if (pos_ < src_.size()) ++pos_;
      } else if (c == '(') {
        ++depth;
        ++pos_;
      } else if (c == ')') {
        if (--depth == 0) break;
        ++pos_;
      } else {
        ++pos_;
      }
    }
    if (depth == 0) {
      splice_substitution_body(src_.substr(start, pos_ - start));
      ++pos_;  // closing paren
      emit(")", TokenKind::SubstitutionClose);
    } else {
      warn(LexWarning::UnbalancedSubstitution);
      splice_substitution_body(src_.substr(start));
    }
  }

  void scan_backtick_substitution() {
    flush_word();
    emit("`", TokenKind::SubstitutionOpen);
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '`') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) pos_ += 2;
      else ++pos_;
    }
    if (pos_ < src_.size()) {
      splice_substitution_body(src_.substr(start, pos_ - start));
      ++pos_;  // closing backtick
      emit("`", TokenKind::SubstitutionClose);
    } else {
      warn(LexWarning::UnbalancedSubstitution);
      splice_substitution_body(src_.substr(start));
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  std::string word_;
  std::size_t unquoted_prefix_ = 0;
  bool prefix_open_ = true;

  std::vector<Token> tokens_;
  std::vector<LexWarning> warnings_;
};

LexResult lex(std::string_view src, int depth) {
  return Lexer(src, depth).run();
}

std::string join_continuations(std::string_view raw) {
  std::string joined;
  joined.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\\' && i + 1 < raw.size() && raw[i + 1] == '\n') {
      ++i;
      continue;
    }
    if (raw[i] == '\\' && i + 2 < raw.size() && raw[i + 1] == '\r' && raw[i + 2] == '\n') {
      i += 2;
      continue;
    }
    joined.push_back(raw[i]);
  }
  return joined;
}

}  // namespace

TokenizedCommand tokenize(std::string_view raw) {
  TokenizedCommand out;
  out.raw.assign(raw);
  LexResult result;
  if (raw.find('\\') != std::string_view::npos && raw.find('\n') != std::string_view::npos) {
    const std::string joined = join_continuations(raw);
    result = lex(joined, 0);
  } else {
    result = lex(raw, 0);
  }
  out.tokens = std::move(result.tokens);
  out.warnings = std::move(result.warnings);
  return out;
}

}  // namespace slp
