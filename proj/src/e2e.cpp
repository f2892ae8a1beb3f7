#include "wordpiece/e2e.hpp"

#include <cassert>

#include "wordpiece/text_classify.hpp"

namespace wordpiece {

bool is_word_boundary(std::u32string_view s, std::size_t i) {
  if (i >= s.size()) {
    return true;
  }
  return (i > 0 && is_punct_char(s[i - 1])) || is_space_char(s[i]) ||
         is_punct_char(s[i]);
}

void tokenize_text_into(const TokenizerModel& model, std::u32string_view text,
                        TokenSeq& out, MatchStats* stats) {
  assert(model.is_e2e());
  out.clear();
  if (text.empty()) {
    return;
  }
  const Vocabulary& vocab = model.vocab();
  const NodeId r = model.trie().root();
  const NodeId rs = model.trie().suffix_root();
  const NodeId rp = model.e2e().punct_root;
  const char32_t boundary = vocab.boundary_char();
  const detail::PaddedView s{text, boundary};
  const std::size_t n = s.size();

  // One-slot memo: the cursor only moves forward, so re-classification only
  // ever asks about the position just classified.
  std::size_t memo_pos = n + 1;
  CharClass memo_cls = CharClass::Space;
  const auto classify = [&](std::size_t i) {
    if (i != memo_pos) {
      const char32_t c = s[i];
      memo_cls = (c == boundary) ? CharClass::Space : classify_char(c);
      memo_pos = i;
      if (stats != nullptr) {
        ++stats->classifier_calls;
      }
    }
    return memo_cls;
  };

  TokenSeq word_tokens;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t word_start = i;
    word_tokens.clear();
    auto [u, stop] = detail::run_match(model, s, i, word_tokens, stats);
    i = stop;
    const CharClass kind = stop < n ? classify(stop) : CharClass::Space;

    if (stop == word_start && kind == CharClass::Punct) {
      // Punctuation with no precomputed leaf (rare, non-ASCII): behave as if
      // the leaf existed — emit the character's id or unk, land on r_p.
      const char32_t c = s[stop];
      TokenId id = vocab.id_of(std::u32string_view(&c, 1));
      if (id == kNoToken || (vocab.max_word_length() && *vocab.max_word_length() < 1)) {
        id = vocab.unk_id();
      }
      out.push_back(id);
      ++i;
      while (i < n && classify(i) == CharClass::Space) {
        ++i;
      }
      continue;
    }

    // A word ends well if the stop is a boundary -- whitespace, punctuation,
    // end of text, or right after a consumed punctuation word (u == r_p) --
    // and the landing node says all consumed characters were covered.
    const bool at_boundary = stop >= n || kind != CharClass::Word || u == rp;
    bool ok = at_boundary && (u == r || u == rs || u == rp);
    if (ok && vocab.max_word_length() &&
        stop - word_start > *vocab.max_word_length()) {
      ok = false;
    }
    if (!ok) {
      word_tokens.assign(1, vocab.unk_id());
    } else if (u == rs && word_tokens.empty()) {
      // The word is exactly the suffix indicator.
      const auto corner = model.suffix_indicator_tokens();
      word_tokens.assign(corner.begin(), corner.end());
    }
    out.insert(out.end(), word_tokens.begin(), word_tokens.end());

    if (!ok) {
      while (i < n && classify(i) == CharClass::Word) {
        ++i;
      }
    }
    while (i < n && classify(i) == CharClass::Space) {
      ++i;
    }
  }
}

TokenSeq tokenize_text(const TokenizerModel& model, std::u32string_view text,
                       MatchStats* stats) {
  TokenSeq out;
  tokenize_text_into(model, text, out, stats);
  return out;
}

}  // namespace wordpiece
