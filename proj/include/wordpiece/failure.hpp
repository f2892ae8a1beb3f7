#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wordpiece/trie.hpp"

namespace wordpiece {

// Per-node failure link f(v) and failure pops F(v). Pops live in one flat
// pool addressed by per-node spans.
class FailureTable {
 public:
  explicit FailureTable(std::size_t node_count)
      : fail_(node_count, kNoNode), spans_(node_count, {0, 0}) {}

  NodeId link(NodeId v) const { return fail_[static_cast<std::size_t>(v)]; }

  std::span<const TokenId> pops(NodeId v) const {
    const auto [offset, len] = spans_[static_cast<std::size_t>(v)];
    return {pool_.data() + offset, len};
  }

  std::size_t node_count() const { return fail_.size(); }
  std::size_t pool_size() const { return pool_.size(); }

  void set_link(NodeId v, NodeId target) { fail_[static_cast<std::size_t>(v)] = target; }

  // Stores F(v); each node is assigned at most once.
  template <typename Range>
  void set_pops(NodeId v, const Range& tokens) {
    spans_[static_cast<std::size_t>(v)] = {static_cast<std::uint32_t>(pool_.size()),
                                           static_cast<std::uint32_t>(tokens.size())};
    pool_.insert(pool_.end(), tokens.begin(), tokens.end());
  }

 private:
  std::vector<NodeId> fail_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> spans_;
  std::vector<TokenId> pool_;

  friend struct FailureSerialization;
};

struct PrecomputeStats {
  std::uint64_t edge_visits = 0;
  std::uint64_t failure_traversals = 0;
};

// BFS precomputation of f/F from the parent tables. Works on freshly built
// tries and on end-to-end augmented ones (punctuation leaves are data nodes,
// so they take the f = r_suffix, F = [token] branch).
FailureTable precompute(const Trie& trie, const Vocabulary& vocab,
                        PrecomputeStats* stats = nullptr);

// The definitional slow path: pop the longest matchable prefix off chi_v,
// re-prefix the remainder with the suffix indicator, and repeat until the
// remainder is on the trie. Link is kNoNode when a pop step finds no prefix.
std::pair<NodeId, TokenSeq> failure_by_definition(const Trie& trie,
                                                  const Vocabulary& vocab,
                                                  NodeId v);

struct E2EAugmentation {
  NodeId punct_root = kNoNode;  // r_p: no parent, no edges, empty string
  // (character, leaf node) for every precomputed punctuation character.
  std::vector<std::pair<char32_t, NodeId>> punct_leaves;
};

// End-to-end trie surgery: removes every punctuation-labeled edge, then adds
// a leaf child of the root per enumerable punctuation character carrying the
// character's vocabulary id (unk when absent). Call before precompute(); once
// the table exists, redirect_punct_failures() points the leaves at r_p.
E2EAugmentation augment_for_e2e(Trie& trie, const Vocabulary& vocab);

void redirect_punct_failures(FailureTable& table, const E2EAugmentation& aug);

// Failure-free transition tables. States are the trie nodes plus two
// synthetic word-end states entered by consuming the boundary character from
// r or r_suffix (the only way a word can end well). Characters outside the
// alphabet use the per-state dead column: the pops collected by cascading to
// the end of the failure chain with no edge ever matching.
class FstTable {
 public:
  struct Cell {
    NodeId next;
    std::span<const TokenId> out;
  };

  std::size_t state_count() const { return state_count_; }
  NodeId end_state_root() const { return end_root_; }
  NodeId end_state_suffix() const { return end_suffix_; }
  std::span<const char32_t> alphabet() const { return alphabet_; }

  int column(char32_t c) const;

  Cell step(NodeId state, char32_t c) const {
    const int col = column(c);
    const std::size_t row = static_cast<std::size_t>(state);
    if (col < 0) {
      return {kNoNode, span_at(dead_spans_[row])};
    }
    const std::size_t idx = row * alphabet_.size() + static_cast<std::size_t>(col);
    return {next_[idx], span_at(out_spans_[idx])};
  }

  Cell step_column(NodeId state, int col) const {
    if (col < 0) {
      return {kNoNode, span_at(dead_spans_[static_cast<std::size_t>(state)])};
    }
    const std::size_t idx =
        static_cast<std::size_t>(state) * alphabet_.size() + static_cast<std::size_t>(col);
    return {next_[idx], span_at(out_spans_[idx])};
  }

 private:
  using Span = std::pair<std::uint32_t, std::uint32_t>;

  std::span<const TokenId> span_at(Span s) const {
    return {pool_.data() + s.first, s.second};
  }

  std::vector<char32_t> alphabet_;  // sorted: characters of V + boundary
  std::size_t state_count_ = 0;
  NodeId end_root_ = kNoNode;
  NodeId end_suffix_ = kNoNode;
  std::vector<NodeId> next_;
  std::vector<Span> out_spans_;
  std::vector<Span> dead_spans_;
  std::vector<TokenId> pool_;

  friend FstTable compile_fst(const Trie&, const FailureTable&, const Vocabulary&);
  friend struct FstSerialization;
};

// Eliminates failure transitions: for every (state, alphabet character) the
// cell holds the landing state and pops of running the live failure cascade.
FstTable compile_fst(const Trie& trie, const FailureTable& table,
                     const Vocabulary& vocab);

}  // namespace wordpiece
