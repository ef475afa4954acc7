#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace kparadigm::utf8 {

// Decodes the code point starting at `offset` and advances past it;
// nullopt (offset untouched) on malformed input.
std::optional<char32_t> next(std::string_view text, std::size_t& offset);

// Decodes UTF-8 into code points; nullopt on malformed input.
std::optional<std::u32string> decode(std::string_view text);

std::string encode(std::u32string_view cps);
void append(std::string& out, char32_t cp);

}  // namespace kparadigm::utf8
