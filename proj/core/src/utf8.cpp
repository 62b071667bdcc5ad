#include "qaens/utf8.hpp"

#include <algorithm>
#include <iterator>

#include "qaens/errors.hpp"

namespace qaens {
namespace {

struct CodeRange {
  char32_t lo;
  char32_t hi;
};

struct LowerPair {
  char32_t from;
  char32_t to;
};

#include "unicode_tables.inc"

// Decodes one code point starting at text[pos]; advances pos.
char32_t next(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3, cp = lead & 0x07, min = 0x10000;
  } else {
    fail(ErrorCode::InvalidArgument, "invalid UTF-8 lead byte at offset " + std::to_string(pos));
  }
  if (pos + static_cast<std::size_t>(extra) >= text.size()) {
    fail(ErrorCode::InvalidArgument, "truncated UTF-8 sequence at offset " + std::to_string(pos));
  }
  for (int k = 1; k <= extra; ++k) {
    const unsigned char c = byte(pos + k);
    if ((c & 0xC0) != 0x80) {
      fail(ErrorCode::InvalidArgument, "invalid UTF-8 continuation at offset " + std::to_string(pos + k));
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    fail(ErrorCode::InvalidArgument, "invalid UTF-8 code point at offset " + std::to_string(pos));
  }
  pos += static_cast<std::size_t>(extra) + 1;
  return cp;
}

}  // namespace

namespace utf8 {

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(next(text, pos));
  return out;
}

std::u32string decode_lenient(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    try {
      out.push_back(next(text, pos));
    } catch (const Error&) {
      out.push_back(U'\uFFFD');
      ++pos;
    }
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append(out, cp);
  return out;
}

std::vector<std::size_t> boundaries(std::string_view text) {
  std::vector<std::size_t> out;
  out.reserve(text.size() + 1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    out.push_back(pos);
    next(text, pos);
  }
  out.push_back(text.size());
  return out;
}

}  // namespace utf8

namespace unicode {

bool is_punctuation(char32_t cp) noexcept {
  const auto it = std::upper_bound(std::begin(kPunctuationRanges), std::end(kPunctuationRanges), cp,
                                   [](char32_t v, const CodeRange& r) { return v < r.lo; });
  return it != std::begin(kPunctuationRanges) && cp <= std::prev(it)->hi;
}

bool is_whitespace(char32_t cp) noexcept {
  return std::binary_search(std::begin(kWhitespace), std::end(kWhitespace), cp);
}

char32_t to_lower(char32_t cp) noexcept {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  const auto it = std::lower_bound(std::begin(kLowerMap), std::end(kLowerMap), cp,
                                   [](const LowerPair& p, char32_t v) { return p.from < v; });
  return (it != std::end(kLowerMap) && it->from == cp) ? it->to : cp;
}

}  // namespace unicode
}  // namespace qaens
