#pragma once

#include <string_view>

#include "slp/token.hpp"

namespace slp {

/// Lexes a single shell command line into tokens.
///
/// The lexer understands enough POSIX shell surface syntax to keep
/// semantic units intact without executing anything:
///   - single- and double-quoted spans stay one token (quotes stripped),
///   - command substitution `$(...)` and backticks is recursed into and
///     bracketed by SubstitutionOpen/SubstitutionClose marker tokens,
///   - redirection and control operators are split out even when glued
///     to neighbouring words (`a>b` -> `a`, `>`, `b`), longest match first,
///   - words starting with an unquoted `-` or `+` are classified Flag and
///     kept whole (`--color=auto` is one token),
///   - `NAME=...` words with an unquoted name part are classified Assignment.
///
/// There is no expansion of variables, aliases or globs and no grammar
/// beyond the token level. Unbalanced quotes or substitutions do not fail:
/// the rest of the line is consumed as quoted content / substitution body
/// and the result carries a warning.
///
/// Backslash-newline continuations are joined before lexing. The same
/// input always yields the same token list.
TokenizedCommand tokenize(std::string_view raw);

}  // namespace slp
