#include "wordpiece/failure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wordpiece/oracle.hpp"
#include "wordpiece/text_classify.hpp"

namespace wordpiece {

FailureTable precompute(const Trie& trie, const Vocabulary& vocab,
                        PrecomputeStats* stats) {
  FailureTable table(trie.size());
  const NodeId r = trie.root();
  const NodeId rs = trie.suffix_root();

  std::deque<NodeId> queue;
  queue.push_back(r);
  if (rs != r) {
    queue.push_back(rs);
  }

  std::vector<TokenId> cascade_pops;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const auto& [c, v] : trie.node(u).edges) {
      if (v == rs) {
        continue;  // the suffix root is a BFS root of its own
      }
      if (stats != nullptr) {
        ++stats->edge_visits;
      }
      if (trie.node(v).is_data()) {
        table.set_link(v, rs);
        const TokenId tok[1] = {trie.node(v).token};
        table.set_pops(v, std::span<const TokenId>(tok, 1));
      } else {
        NodeId z = table.link(u);
        cascade_pops.clear();
        while (z != kNoNode && trie.child(z, c) == kNoNode) {
          const auto pops = table.pops(z);
          cascade_pops.insert(cascade_pops.end(), pops.begin(), pops.end());
          z = table.link(z);
          if (stats != nullptr) {
            ++stats->failure_traversals;
          }
        }
        if (z != kNoNode) {
          table.set_link(v, trie.child(z, c));
          const auto parent_pops = table.pops(u);
          std::vector<TokenId> combined;
          combined.reserve(parent_pops.size() + cascade_pops.size());
          combined.insert(combined.end(), parent_pops.begin(), parent_pops.end());
          combined.insert(combined.end(), cascade_pops.begin(), cascade_pops.end());
          table.set_pops(v, combined);
        }
      }
      queue.push_back(v);
    }
  }
  return table;
}

std::pair<NodeId, TokenSeq> failure_by_definition(const Trie& trie,
                                                  const Vocabulary& vocab,
                                                  NodeId v) {
  // The first pop is mandatory (the list must be non-empty); from there it is
  // MinPop matching of the remainder.
  const std::u32string w = trie.node_string(v);
  const TokenId p = oracle::longest_prefix_p(vocab, w);
  if (p == kNoToken) {
    return {kNoNode, {}};
  }
  std::u32string q = vocab.suffix_indicator() + w.substr(vocab.token(p).size());
  oracle::MinPopResult rest = oracle::minpop_g(vocab, trie, q);
  if (rest.landing == kNoNode) {
    return {kNoNode, {}};
  }
  TokenSeq pops;
  pops.push_back(p);
  pops.insert(pops.end(), rest.pops.begin(), rest.pops.end());
  return {rest.landing, std::move(pops)};
}

E2EAugmentation augment_for_e2e(Trie& trie, const Vocabulary& vocab) {
  // Enumerable punctuation: the full ASCII punctuation blocks plus every
  // punctuation character appearing in a vocabulary token. Anything else is
  // handled at run time by the classifier fallback.
  std::set<char32_t> puncts;
  for (char32_t c = 33; c <= 126; ++c) {
    if (is_punct_char(c)) {
      puncts.insert(c);
    }
  }
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    if (static_cast<TokenId>(id) == vocab.unk_id()) {
      continue;
    }
    for (char32_t c : vocab.token(static_cast<TokenId>(id))) {
      if (is_punct_char(c)) {
        puncts.insert(c);
      }
    }
  }

  // Drop every punctuation-labeled edge, including ones on the path to the
  // suffix root: that node is reached only by failure links afterwards.
  const std::size_t node_count = trie.size();
  for (std::size_t u = 0; u < node_count; ++u) {
    std::vector<char32_t> labels;
    for (const auto& [c, v] : trie.node(static_cast<NodeId>(u)).edges) {
      if (is_punct_char(c)) {
        labels.push_back(c);
      }
    }
    for (char32_t c : labels) {
      trie.remove_edge(static_cast<NodeId>(u), c);
    }
  }

  E2EAugmentation aug;
  for (char32_t c : puncts) {
    const NodeId leaf = trie.add_node(trie.root(), c, 1);
    const TokenId id = vocab.id_of(std::u32string_view(&c, 1));
    trie.set_token(leaf, id != kNoToken ? id : vocab.unk_id());
    aug.punct_leaves.push_back({c, leaf});
  }
  aug.punct_root = trie.add_node(kNoNode, 0, 0);
  return aug;
}

void redirect_punct_failures(FailureTable& table, const E2EAugmentation& aug) {
  for (const auto& [c, leaf] : aug.punct_leaves) {
    table.set_link(leaf, aug.punct_root);
  }
}

int FstTable::column(char32_t c) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
  return (it != alphabet_.end() && *it == c)
             ? static_cast<int>(it - alphabet_.begin())
             : -1;
}

FstTable compile_fst(const Trie& trie, const FailureTable& table,
                     const Vocabulary& vocab) {
  FstTable fst;
  // Edge labels rather than token characters: the same set for a plain
  // vocabulary trie, but also covers end-to-end punctuation leaves.
  std::set<char32_t> alphabet;
  for (std::size_t u = 0; u < trie.size(); ++u) {
    for (const auto& [c, v] : trie.node(static_cast<NodeId>(u)).edges) {
      alphabet.insert(c);
    }
  }
  alphabet.insert(vocab.boundary_char());
  fst.alphabet_.assign(alphabet.begin(), alphabet.end());

  const std::size_t nodes = trie.size();
  fst.state_count_ = nodes + (trie.root() == trie.suffix_root() ? 1 : 2);
  fst.end_root_ = static_cast<NodeId>(nodes);
  fst.end_suffix_ = static_cast<NodeId>(fst.state_count_ - 1);

  const std::size_t cols = fst.alphabet_.size();
  fst.next_.assign(fst.state_count_ * cols, kNoNode);
  fst.out_spans_.assign(fst.state_count_ * cols, {0, 0});
  fst.dead_spans_.assign(fst.state_count_, {0, 0});

  const char32_t boundary = vocab.boundary_char();
  std::vector<TokenId> pops;
  const auto store = [&fst](FstTable::Span& slot, const std::vector<TokenId>& tokens) {
    slot = {static_cast<std::uint32_t>(fst.pool_.size()),
            static_cast<std::uint32_t>(tokens.size())};
    fst.pool_.insert(fst.pool_.end(), tokens.begin(), tokens.end());
  };

  for (std::size_t u = 0; u < nodes; ++u) {
    for (std::size_t col = 0; col < cols; ++col) {
      const char32_t c = fst.alphabet_[col];
      NodeId z = static_cast<NodeId>(u);
      pops.clear();
      NodeId next = kNoNode;
      while (true) {
        const NodeId v = trie.child(z, c);
        if (v != kNoNode) {
          next = v;
          break;
        }
        if (c == boundary && z == trie.root()) {
          next = fst.end_root_;
          break;
        }
        if (c == boundary && z == trie.suffix_root()) {
          next = fst.end_suffix_;
          break;
        }
        if (table.link(z) == kNoNode) {
          break;
        }
        const auto f_pops = table.pops(z);
        pops.insert(pops.end(), f_pops.begin(), f_pops.end());
        z = table.link(z);
      }
      fst.next_[u * cols + col] = next;
      if (!pops.empty()) {
        store(fst.out_spans_[u * cols + col], pops);
      }
    }
    // Dead column: cascade with no matching edge anywhere.
    NodeId z = static_cast<NodeId>(u);
    pops.clear();
    while (table.link(z) != kNoNode) {
      const auto f_pops = table.pops(z);
      pops.insert(pops.end(), f_pops.begin(), f_pops.end());
      z = table.link(z);
    }
    if (!pops.empty()) {
      store(fst.dead_spans_[u], pops);
    }
  }
  // End-state rows stay all-null: a word never continues past its boundary.
  return fst;
}

}  // namespace wordpiece
