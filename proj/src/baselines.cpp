#include "slp/baselines.hpp"

#include <array>
#include <cstdint>

namespace slp {
namespace {

struct Decoded {
  char32_t cp = 0;
  std::size_t len = 1;
};

// Minimal UTF-8 decoder; malformed sequences fall back to one byte at a
// time so tokenization always makes progress.
Decoded decode_utf8(std::string_view s, std::size_t i) {
  const auto byte = static_cast<unsigned char>(s[i]);
  if (byte < 0x80) return {byte, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((byte & 0xE0) == 0xC0) {
    len = 2;
    cp = byte & 0x1F;
  } else if ((byte & 0xF0) == 0xE0) {
    len = 3;
    cp = byte & 0x0F;
  } else if ((byte & 0xF8) == 0xF0) {
    len = 4;
    cp = byte & 0x07;
  } else {
    return {byte, 1};
  }
  if (i + len > s.size()) return {byte, 1};
  for (std::size_t k = 1; k < len; ++k) {
    const auto cont = static_cast<unsigned char>(s[i + k]);
    if ((cont & 0xC0) != 0x80) return {byte, 1};
    cp = (cp << 6) | (cont & 0x3F);
  }
  return {cp, len};
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return (cp >= 0x2000 && cp <= 0x200A);
  }
}

struct Range {
  char32_t lo, hi;
};

// Principal Unicode letter and digit blocks; enough to treat non-ASCII
// alphanumerics as word characters without a full property table.
constexpr std::array<Range, 40> kAlnumRanges{{
    {0x00AA, 0x00AA}, {0x00B5, 0x00B5}, {0x00BA, 0x00BA},
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02C1},
    {0x0370, 0x0374}, {0x0376, 0x0377}, {0x037A, 0x037D}, {0x037F, 0x037F},
    {0x0386, 0x0386}, {0x0388, 0x038A}, {0x038C, 0x038C}, {0x038E, 0x03A1},
    {0x03A3, 0x03F5}, {0x03F7, 0x0481}, {0x048A, 0x052F},
    {0x0531, 0x0556}, {0x0560, 0x0588}, {0x05D0, 0x05EA},
    {0x0620, 0x064A}, {0x0660, 0x0669}, {0x0671, 0x06D3}, {0x06F0, 0x06F9},
    {0x0904, 0x0939}, {0x0958, 0x0961}, {0x0966, 0x096F},
    {0x0E01, 0x0E30}, {0x0E40, 0x0E46}, {0x0E50, 0x0E59},
    {0x10A0, 0x10C5}, {0x10D0, 0x10FA},
    {0x1E00, 0x1F15}, {0x3041, 0x3096}, {0x30A1, 0x30FA}, {0x3105, 0x312F},
    {0x3400, 0x4DBF}, {0x4E00, 0x9FFF}, {0xAC00, 0xD7A3},
    {0xFF10, 0xFF19},
}};

bool is_word_cp(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
           (cp >= '0' && cp <= '9') || cp == '_';
  }
  for (const auto& r : kAlnumRanges) {
    if (cp >= r.lo && cp <= r.hi) return true;
  }
  return cp >= 0xFF21 && cp <= 0xFF5A;  // fullwidth latin letters
}

}  // namespace

std::vector<std::string> whitespace_tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < raw.size()) {
    const Decoded d = decode_utf8(raw, i);
    if (is_space_cp(d.cp)) {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    } else {
      current.append(raw.substr(i, d.len));
    }
    i += d.len;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> wordpunct_tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  bool current_is_word = false;
  std::size_t i = 0;
  while (i < raw.size()) {
    const Decoded d = decode_utf8(raw, i);
    if (is_space_cp(d.cp)) {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    } else {
      const bool word = is_word_cp(d.cp);
      if (!current.empty() && word != current_is_word) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      current.append(raw.substr(i, d.len));
      current_is_word = word;
    }
    i += d.len;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace slp
