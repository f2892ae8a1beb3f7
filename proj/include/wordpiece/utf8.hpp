#pragma once

#include <string>
#include <string_view>

namespace wordpiece {

// Decodes UTF-8 into code points. Invalid sequences become U+FFFD, one
// replacement per rejected byte, so decoding never fails.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view text);

void append_utf8(std::string& out, char32_t c);

// Code point count of a UTF-8 string.
std::size_t utf8_length(std::string_view text);

}  // namespace wordpiece
