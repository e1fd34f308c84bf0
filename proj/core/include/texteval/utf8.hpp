#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace texteval {

// Decodes UTF-8 into code points. Lenient: an invalid byte stands for itself
// so that malformed input still has a well-defined length and ordering.
std::vector<char32_t> decode_utf8(std::string_view text);

// Strips ASCII whitespace from both ends.
std::string_view trim(std::string_view text);

bool is_blank(std::string_view text);

}  // namespace texteval
