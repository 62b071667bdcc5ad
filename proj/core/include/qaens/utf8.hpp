#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qaens::utf8 {

// Throws Error(InvalidArgument) on malformed input.
std::u32string decode(std::string_view text);
/// Malformed bytes become U+FFFD instead of throwing.
std::u32string decode_lenient(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

/// Byte offset of every code point boundary: result[k] is where code point k
/// starts, and result.back() == text.size().
std::vector<std::size_t> boundaries(std::string_view text);

}  // namespace qaens::utf8

namespace qaens::unicode {

bool is_punctuation(char32_t cp) noexcept;  // general category P*
bool is_whitespace(char32_t cp) noexcept;
char32_t to_lower(char32_t cp) noexcept;    // simple one-to-one mapping

}  // namespace qaens::unicode
