#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace abjadi::utf8 {

// Decodes UTF-8 into codepoints. Malformed bytes become U+FFFD.
std::vector<char32_t> decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

}  // namespace abjadi::utf8
