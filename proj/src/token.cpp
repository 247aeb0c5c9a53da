#include "slp/token.hpp"

#include <ostream>

namespace slp {

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Flag: return "Flag";
    case TokenKind::Assignment: return "Assignment";
    case TokenKind::Operator: return "Operator";
    case TokenKind::SubstitutionOpen: return "SubstitutionOpen";
    case TokenKind::SubstitutionClose: return "SubstitutionClose";
  }
  return "?";
}

const char* to_string(LexWarning warning) {
  switch (warning) {
    case LexWarning::UnbalancedQuote: return "unbalanced quote";
    case LexWarning::UnbalancedSubstitution: return "unbalanced substitution";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Token& token) {
  return os << to_string(token.kind) << "(" << token.value << ")";
}

}  // namespace slp
