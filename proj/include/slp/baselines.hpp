#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace slp {

/// Splits on maximal runs of Unicode whitespace. Nothing else: quotes,
/// operators and substitutions are plain characters.
std::vector<std::string> whitespace_tokenize(std::string_view raw);

/// Emits maximal runs of word characters (ASCII letters, digits and
/// underscore plus non-ASCII alphanumerics) and maximal runs of other
/// non-whitespace characters as separate tokens.
std::vector<std::string> wordpunct_tokenize(std::string_view raw);

}  // namespace slp
