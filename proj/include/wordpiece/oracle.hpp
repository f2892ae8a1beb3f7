#pragma once

#include <string_view>

#include "wordpiece/trie.hpp"
#include "wordpiece/vocab.hpp"

namespace wordpiece::oracle {

// Reference implementations written for clarity, not speed. They are the
// differential-test oracles for the fast engines and the naive baseline for
// the benchmarks.

// The longest non-empty matchable prefix of w (kNoToken when none exists).
// Excludes the empty string, the suffix indicator itself, and unk; when w
// starts with the indicator the prefix must extend it; for w == indicator
// the answer is always kNoToken.
TokenId longest_prefix_p(const Vocabulary& vocab, std::u32string_view w);

// The suffix of w after replacing longest_prefix_p(w) with the indicator.
// Requires the prefix to exist.
std::u32string suffix_q(const Vocabulary& vocab, std::u32string_view w);

// The recursive MaxMatch definition: [] for the empty string or the bare
// indicator, [unk] when any step finds no prefix, otherwise the popped
// prefixes. Ignores max_word_length.
TokenSeq maxmatch_recursive(const Vocabulary& vocab, std::u32string_view w);

// The original greedy algorithm: per position, scan prefix lengths longest
// first (quadratic); any failure maps the whole word to unk. Applies
// max_word_length. Also the naive benchmark baseline and the source of the
// precomputed answer for the w == indicator corner case.
TokenSeq original_wordpiece_word(const Vocabulary& vocab, std::u32string_view w);
void original_wordpiece_word_into(const Vocabulary& vocab, std::u32string_view w,
                                  TokenSeq& out);

struct MinPopResult {
  NodeId landing = kNoNode;
  TokenSeq pops;
};

// MinPop matching: pop longest matchable prefixes off w until the remainder
// is on the trie; landing is kNoNode when a step finds no prefix (the pops
// gathered up to that point are still reported).
MinPopResult minpop_g(const Vocabulary& vocab, const Trie& trie,
                      std::u32string_view w);

// One-character MinPop step from node u (kNoNode allowed): minpop_g of the
// node's string extended by c.
MinPopResult onestep_h(const Vocabulary& vocab, const Trie& trie, NodeId u,
                       char32_t c);

// Throwaway copy of the trie with two extra nodes for the boundary character
// and indicator-plus-boundary, so words ending with the boundary resolve.
Trie with_boundary_nodes(const Trie& trie, const Vocabulary& vocab);

// Splits text into words on whitespace, with each punctuation character a
// word of its own. The boundary character counts as whitespace.
std::vector<std::u32string> pretokenize(const Vocabulary& vocab,
                                        std::u32string_view text);

// Pre-tokenize, run the original single-word algorithm per word, concatenate.
TokenSeq e2e_reference(const Vocabulary& vocab, std::u32string_view text);
void e2e_reference_into(const Vocabulary& vocab, std::u32string_view text,
                        TokenSeq& out);

}  // namespace wordpiece::oracle
