#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "wordpiece/failure.hpp"
#include "wordpiece/trie.hpp"
#include "wordpiece/vocab.hpp"

namespace wordpiece {

struct MatchStats {
  std::uint64_t normal_transitions = 0;
  std::uint64_t failure_transitions = 0;
  std::uint64_t classifier_calls = 0;
  std::uint64_t chars_consumed = 0;
};

struct BuildOptions {
  bool e2e = false;
  bool fst = false;
};

// Immutable bundle of vocabulary, trie, and failure table, optionally with a
// punctuation-augmented trie for text mode and precomputed FST tables. Pure
// reads throughout; share freely across threads.
class TokenizerModel {
 public:
  static TokenizerModel build(Vocabulary vocab, const BuildOptions& options = {});

  const Vocabulary& vocab() const { return vocab_; }
  const Trie& trie() const { return trie_; }
  const FailureTable& failure() const { return failure_; }
  const FstTable* fst() const { return fst_ ? &*fst_ : nullptr; }
  std::span<const TokenId> suffix_indicator_tokens() const { return suffix_indicator_tokens_; }

  bool is_e2e() const { return e2e_.has_value(); }
  const E2EAugmentation& e2e() const { return *e2e_; }

 private:
  friend struct ModelSerialization;
  TokenizerModel() = default;

  Vocabulary vocab_;
  Trie trie_;
  FailureTable failure_{0};
  std::optional<FstTable> fst_;
  std::optional<E2EAugmentation> e2e_;
  TokenSeq suffix_indicator_tokens_;
};

struct MatchResult {
  TokenSeq tokens;
  NodeId node = kNoNode;
  std::size_t pos = 0;
};

namespace detail {

// A character sequence plus one virtual boundary character at the end, so
// neither single words nor whole texts get copied for the sentinel.
struct PaddedView {
  std::u32string_view chars;
  char32_t boundary;
  std::size_t size() const { return chars.size() + 1; }
  char32_t operator[](std::size_t i) const {
    return i < chars.size() ? chars[i] : boundary;
  }
};

// The failure-transition loop shared by the word and text tokenizers.
// Appends pops into `tokens`; returns the landing node and the index of the
// first unconsumed character.
template <typename Seq>
std::pair<NodeId, std::size_t> run_match(const TokenizerModel& model, const Seq& s,
                                         std::size_t start, TokenSeq& tokens,
                                         MatchStats* stats) {
  const Trie& trie = model.trie();
  const FailureTable& ftab = model.failure();
  NodeId u = trie.root();
  std::size_t i = start;
  const std::size_t n = s.size();
  while (i < n) {
    const char32_t c = s[i];
    NodeId next;
    while ((next = trie.child(u, c)) == kNoNode) {
      const NodeId f = ftab.link(u);
      if (f == kNoNode) {
        return {u, i};
      }
      const auto pops = ftab.pops(u);
      tokens.insert(tokens.end(), pops.begin(), pops.end());
      u = f;
      if (stats != nullptr) {
        ++stats->failure_transitions;
      }
    }
    u = next;
    ++i;
    if (stats != nullptr) {
      ++stats->normal_transitions;
      ++stats->chars_consumed;
    }
  }
  return {u, i};
}

}  // namespace detail

// The failure-transition loop: consumes characters of s from `start`,
// cascading failure links (appending their pops) whenever no edge matches,
// until some character cannot be consumed. Returns the accumulated tokens,
// the landing node, and the index of the first unconsumed character.
// `s` must end with the boundary character.
MatchResult match_loop(const TokenizerModel& model, std::u32string_view s,
                       std::size_t start, MatchStats* stats = nullptr);

// Single-word tokenization; `word` must not contain the boundary character.
TokenSeq tokenize_word(const TokenizerModel& model, std::u32string_view word,
                       MatchStats* stats = nullptr);
void tokenize_word_into(const TokenizerModel& model, std::u32string_view word,
                        TokenSeq& out, MatchStats* stats = nullptr);

// Failure-free variant over the precomputed transition tables: one table
// lookup and one append per character. Requires build with fst.
TokenSeq tokenize_word_fst(const TokenizerModel& model, std::u32string_view word);
void tokenize_word_fst_into(const TokenizerModel& model, std::u32string_view word,
                            TokenSeq& out);

}  // namespace wordpiece
