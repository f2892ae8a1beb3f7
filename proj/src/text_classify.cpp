#include "wordpiece/text_classify.hpp"

#include <algorithm>

namespace wordpiece {

namespace {

bool in_ranges(const detail::CodepointRange* ranges, std::size_t n, char32_t c) {
  const auto* end = ranges + n;
  const auto* it = std::upper_bound(
      ranges, end, c,
      [](char32_t v, const detail::CodepointRange& r) { return v < r.lo; });
  return it != ranges && c <= (it - 1)->hi;
}

}  // namespace

bool is_punct_char(char32_t c) {
  if ((c >= 33 && c <= 47) || (c >= 58 && c <= 64) || (c >= 91 && c <= 96) ||
      (c >= 123 && c <= 126)) {
    return true;
  }
  if (c < 0x80) {
    return false;
  }
  return in_ranges(detail::kPunctuationRanges, detail::kPunctuationRanges_size, c);
}

bool is_space_char(char32_t c) {
  if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r') {
    return true;
  }
  if (c < 0x80) {
    return false;
  }
  return in_ranges(detail::kSpaceSeparatorRanges,
                   detail::kSpaceSeparatorRanges_size, c);
}

CharClass classify_char(char32_t c) {
  if (is_space_char(c)) {
    return CharClass::Space;
  }
  if (is_punct_char(c)) {
    return CharClass::Punct;
  }
  return CharClass::Word;
}

}  // namespace wordpiece
