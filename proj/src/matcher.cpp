#include "wordpiece/matcher.hpp"

#include <cassert>

#include "wordpiece/oracle.hpp"

namespace wordpiece {

MatchResult match_loop(const TokenizerModel& model, std::u32string_view s,
                       std::size_t start, MatchStats* stats) {
  MatchResult res;
  auto [node, pos] = detail::run_match(model, s, start, res.tokens, stats);
  res.node = node;
  res.pos = pos;
  return res;
}

void tokenize_word_into(const TokenizerModel& model, std::u32string_view word,
                        TokenSeq& out, MatchStats* stats) {
  out.clear();
  const Vocabulary& vocab = model.vocab();
  if (vocab.max_word_length() && word.size() > *vocab.max_word_length()) {
    out.push_back(vocab.unk_id());
    return;
  }
  const detail::PaddedView s{word, vocab.boundary_char()};
  auto [node, pos] = detail::run_match(model, s, 0, out, stats);
  if (pos < word.size() ||
      (node != model.trie().root() && node != model.trie().suffix_root())) {
    out.assign(1, vocab.unk_id());
  } else if (node == model.trie().suffix_root() && out.empty()) {
    // The word is the suffix indicator itself; defer to the original
    // algorithm's precomputed answer.
    const auto corner = model.suffix_indicator_tokens();
    out.assign(corner.begin(), corner.end());
  }
}

TokenSeq tokenize_word(const TokenizerModel& model, std::u32string_view word,
                       MatchStats* stats) {
  TokenSeq out;
  tokenize_word_into(model, word, out, stats);
  return out;
}

void tokenize_word_fst_into(const TokenizerModel& model, std::u32string_view word,
                            TokenSeq& out) {
  const FstTable* fst = model.fst();
  assert(fst != nullptr);
  out.clear();
  const Vocabulary& vocab = model.vocab();
  if (vocab.max_word_length() && word.size() > *vocab.max_word_length()) {
    out.push_back(vocab.unk_id());
    return;
  }
  NodeId u = model.trie().root();
  const std::size_t n = word.size();
  for (std::size_t i = 0; i <= n && u != kNoNode; ++i) {
    const char32_t c = i < n ? word[i] : vocab.boundary_char();
    const FstTable::Cell cell = fst->step(u, c);
    out.insert(out.end(), cell.out.begin(), cell.out.end());
    u = cell.next;
  }
  if (u != fst->end_state_root() && u != fst->end_state_suffix()) {
    out.assign(1, vocab.unk_id());
  } else if (u == fst->end_state_suffix() && out.empty()) {
    const auto corner = model.suffix_indicator_tokens();
    out.assign(corner.begin(), corner.end());
  }
}

TokenSeq tokenize_word_fst(const TokenizerModel& model, std::u32string_view word) {
  TokenSeq out;
  tokenize_word_fst_into(model, word, out);
  return out;
}

TokenizerModel TokenizerModel::build(Vocabulary vocab, const BuildOptions& options) {
  TokenizerModel m;
  m.vocab_ = std::move(vocab);
  m.trie_ = Trie::build(m.vocab_);
  if (options.e2e) {
    m.e2e_ = augment_for_e2e(m.trie_, m.vocab_);
  }
  m.failure_ = precompute(m.trie_, m.vocab_);
  if (m.e2e_) {
    redirect_punct_failures(m.failure_, *m.e2e_);
  }
  if (options.fst) {
    m.fst_ = compile_fst(m.trie_, m.failure_, m.vocab_);
  }
  m.suffix_indicator_tokens_ =
      oracle::original_wordpiece_word(m.vocab_, m.vocab_.suffix_indicator());
  return m;
}

}  // namespace wordpiece
