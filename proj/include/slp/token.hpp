#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slp {

enum class TokenKind {
  Word,
  Flag,
  Assignment,
  Operator,
  SubstitutionOpen,
  SubstitutionClose,
};

const char* to_string(TokenKind kind);

struct Token {
  std::string value;
  TokenKind kind = TokenKind::Word;

  friend bool operator==(const Token&, const Token&) = default;
};

std::ostream& operator<<(std::ostream& os, const Token& token);

enum class LexWarning {
  UnbalancedQuote,
  UnbalancedSubstitution,
};

const char* to_string(LexWarning warning);

/// One lexed command line. `warnings` is empty for well-formed input;
/// callers that need strictness treat a non-empty `warnings` as failure.
struct TokenizedCommand {
  std::string raw;
  std::vector<Token> tokens;
  std::vector<LexWarning> warnings;

  bool ok() const { return warnings.empty(); }
};

}  // namespace slp
