#pragma once

#include <string_view>

#include "wordpiece/matcher.hpp"

namespace wordpiece {

// Algorithm-3-style word boundary predicate, exposed for tests and callers:
// i >= |s|, or the previous character is punctuation, or the current one is
// whitespace or punctuation.
bool is_word_boundary(std::u32string_view s, std::size_t i);

// Single-pass end-to-end tokenization over a punctuation-augmented model:
// pre-tokenization (whitespace/punctuation splitting) and per-word matching
// fused into one left-to-right scan. Output equals splitting the text into
// words and running the original single-word algorithm on each.
// Requires model.is_e2e().
TokenSeq tokenize_text(const TokenizerModel& model, std::u32string_view text,
                       MatchStats* stats = nullptr);
void tokenize_text_into(const TokenizerModel& model, std::u32string_view text,
                        TokenSeq& out, MatchStats* stats = nullptr);

}  // namespace wordpiece
