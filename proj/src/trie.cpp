#include "wordpiece/trie.hpp"

#include <algorithm>

namespace wordpiece {

NodeId Trie::child(NodeId u, char32_t c) const {
  const auto& edges = nodes_[static_cast<std::size_t>(u)].edges;
  auto it = std::lower_bound(
      edges.begin(), edges.end(), c,
      [](const std::pair<char32_t, NodeId>& e, char32_t v) { return e.first < v; });
  return (it != edges.end() && it->first == c) ? it->second : kNoNode;
}

NodeId Trie::find(std::u32string_view s) const {
  NodeId u = root_;
  for (char32_t c : s) {
    u = child(u, c);
    if (u == kNoNode) {
      return kNoNode;
    }
  }
  return u;
}

std::u32string Trie::node_string(NodeId v) const {
  std::u32string out;
  while (v != root_ && v != kNoNode) {
    const TrieNode& n = nodes_[static_cast<std::size_t>(v)];
    if (n.parent == kNoNode && v != root_) {
      break;  // detached node (e.g. r_p or a pruned subtree)
    }
    out.push_back(n.label);
    v = n.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

NodeId Trie::add_node(NodeId parent, char32_t label, std::int32_t depth) {
  const NodeId id = static_cast<NodeId>(nodes_.size());
  TrieNode n;
  n.parent = parent;
  n.label = label;
  n.depth = depth;
  nodes_.push_back(std::move(n));
  if (parent != kNoNode) {
    auto& edges = nodes_[static_cast<std::size_t>(parent)].edges;
    auto it = std::lower_bound(
        edges.begin(), edges.end(), label,
        [](const std::pair<char32_t, NodeId>& e, char32_t v) { return e.first < v; });
    edges.insert(it, {label, id});
  }
  return id;
}

NodeId Trie::insert_path(std::u32string_view s) {
  NodeId u = root_;
  for (char32_t c : s) {
    NodeId v = child(u, c);
    if (v == kNoNode) {
      v = add_node(u, c, nodes_[static_cast<std::size_t>(u)].depth + 1);
    }
    u = v;
  }
  return u;
}

void Trie::remove_edge(NodeId parent, char32_t label) {
  auto& edges = nodes_[static_cast<std::size_t>(parent)].edges;
  auto it = std::lower_bound(
      edges.begin(), edges.end(), label,
      [](const std::pair<char32_t, NodeId>& e, char32_t v) { return e.first < v; });
  if (it != edges.end() && it->first == label) {
    nodes_[static_cast<std::size_t>(it->second)].parent = kNoNode;
    edges.erase(it);
  }
}

Trie Trie::build(const Vocabulary& vocab) {
  Trie trie;
  trie.root_ = trie.add_node(kNoNode, 0, 0);

  // The suffix indicator path exists unconditionally; its end node is the
  // suffix root with depth 0 (depth does not count the indicator prefix).
  trie.suffix_root_ = trie.insert_path(vocab.suffix_indicator());
  trie.set_depth(trie.suffix_root_, 0);

  // unk is an id, not a matchable token: it gets no path and no data node.
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    if (static_cast<TokenId>(id) == vocab.unk_id()) {
      continue;
    }
    const std::u32string& tok = vocab.token(static_cast<TokenId>(id));
    const NodeId v = trie.insert_path(tok);
    trie.set_token(v, static_cast<TokenId>(id));
  }

  // Depths under the suffix root were computed before it was reset to 0;
  // fix the whole arena from the final parent depths.
  for (std::size_t v = 0; v < trie.nodes_.size(); ++v) {
    TrieNode& n = trie.nodes_[v];
    if (static_cast<NodeId>(v) == trie.root_ || static_cast<NodeId>(v) == trie.suffix_root_) {
      n.depth = 0;
    } else if (n.parent != kNoNode) {
      n.depth = trie.nodes_[static_cast<std::size_t>(n.parent)].depth + 1;
    }
  }
  return trie;
}

}  // namespace wordpiece
