#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wordpiece/vocab.hpp"

namespace wordpiece {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

struct TrieNode {
  // Outgoing edges, sorted by label.
  std::vector<std::pair<char32_t, NodeId>> edges;
  NodeId parent = kNoNode;
  char32_t label = 0;
  // Data nodes carry a token value: the vocabulary id of the represented
  // string, or unk for end-to-end punctuation leaves.
  TokenId token = kNoToken;
  // Path length from the root, not counting the suffix indicator prefix.
  std::int32_t depth = 0;

  bool is_data() const { return token != kNoToken; }
};

// Vocabulary trie with dense integer node ids. The suffix indicator path
// always exists, so suffix_root() is valid even when the indicator is not a
// vocabulary token; it equals root() for an empty indicator.
class Trie {
 public:
  static Trie build(const Vocabulary& vocab);

  NodeId root() const { return root_; }
  NodeId suffix_root() const { return suffix_root_; }

  std::size_t size() const { return nodes_.size(); }
  const TrieNode& node(NodeId v) const { return nodes_[static_cast<std::size_t>(v)]; }

  NodeId child(NodeId u, char32_t c) const;

  // Walks edges from the root; kNoNode when `s` is not on the trie.
  NodeId find(std::u32string_view s) const;

  // Reconstructs the represented string from parent links.
  std::u32string node_string(NodeId v) const;

  // Mutators, used by construction, end-to-end surgery, and test fixtures.
  NodeId add_node(NodeId parent, char32_t label, std::int32_t depth);
  NodeId insert_path(std::u32string_view s);
  void remove_edge(NodeId parent, char32_t label);
  void set_token(NodeId v, TokenId token) { nodes_[static_cast<std::size_t>(v)].token = token; }
  void set_depth(NodeId v, std::int32_t depth) { nodes_[static_cast<std::size_t>(v)].depth = depth; }

 private:
  std::vector<TrieNode> nodes_;
  NodeId root_ = kNoNode;
  NodeId suffix_root_ = kNoNode;

  friend struct TrieSerialization;
};

}  // namespace wordpiece
