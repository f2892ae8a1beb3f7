#pragma once

#include <cstddef>
#include <cstdint>

namespace wordpiece {

namespace detail {
struct CodepointRange {
  char32_t lo;
  char32_t hi;
};
extern const CodepointRange kPunctuationRanges[];
extern const std::size_t kPunctuationRanges_size;
extern const CodepointRange kSpaceSeparatorRanges[];
extern const std::size_t kSpaceSeparatorRanges_size;
}  // namespace detail

// A character is punctuation iff it falls in the ASCII blocks
// [33,47], [58,64], [91,96], [123,126] or its general category is P*.
bool is_punct_char(char32_t c);

// Whitespace is {space, \t, \n, \r} or general category Zs.
bool is_space_char(char32_t c);

enum class CharClass : std::uint8_t { Word, Space, Punct };

CharClass classify_char(char32_t c);

}  // namespace wordpiece
