#include "wordpiece/oracle.hpp"

#include "wordpiece/text_classify.hpp"

namespace wordpiece::oracle {

namespace {

bool starts_with(std::u32string_view s, std::u32string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

}  // namespace

TokenId longest_prefix_p(const Vocabulary& vocab, std::u32string_view w) {
  const auto& indicator = vocab.suffix_indicator();
  const bool suffix_form = !indicator.empty() && starts_with(w, indicator);
  const std::size_t min_len = suffix_form ? indicator.size() + 1 : 1;
  for (std::size_t len = w.size(); len >= min_len; --len) {
    const TokenId id = vocab.id_of(w.substr(0, len));
    if (id != kNoToken && id != vocab.unk_id()) {
      return id;
    }
  }
  return kNoToken;
}

std::u32string suffix_q(const Vocabulary& vocab, std::u32string_view w) {
  const TokenId p = longest_prefix_p(vocab, w);
  return vocab.suffix_indicator() + std::u32string(w.substr(vocab.token(p).size()));
}

TokenSeq maxmatch_recursive(const Vocabulary& vocab, std::u32string_view w) {
  if (w.empty() || w == vocab.suffix_indicator()) {
    return {};
  }
  TokenSeq result;
  std::u32string cur(w);
  while (true) {
    if (cur.empty() || cur == vocab.suffix_indicator()) {
      return result;
    }
    const TokenId p = longest_prefix_p(vocab, cur);
    if (p == kNoToken) {
      return {vocab.unk_id()};
    }
    result.push_back(p);
    cur = vocab.suffix_indicator() + cur.substr(vocab.token(p).size());
  }
}

void original_wordpiece_word_into(const Vocabulary& vocab, std::u32string_view w,
                                  TokenSeq& out) {
  out.clear();
  if (vocab.max_word_length() && w.size() > *vocab.max_word_length()) {
    out.push_back(vocab.unk_id());
    return;
  }
  const auto& indicator = vocab.suffix_indicator();
  // Per the suffix-indicator semantics, a word starting with (but not equal
  // to) the indicator may only begin with a token that extends it.
  const bool constrain_start =
      !indicator.empty() && starts_with(w, indicator) && w != indicator;
  std::size_t start = 0;
  std::u32string substr;
  while (start < w.size()) {
    TokenId matched = kNoToken;
    std::size_t matched_end = start;
    for (std::size_t end = w.size(); end > start; --end) {
      if (start == 0) {
        if (constrain_start && end <= indicator.size()) {
          break;  // remaining candidates are prefixes of the indicator
        }
        substr.assign(w.substr(0, end));
      } else {
        substr.assign(indicator);
        substr.append(w.substr(start, end - start));
      }
      const TokenId id = vocab.id_of(substr);
      if (id != kNoToken && id != vocab.unk_id()) {
        matched = id;
        matched_end = end;
        break;
      }
    }
    if (matched == kNoToken) {
      out.assign(1, vocab.unk_id());
      return;
    }
    out.push_back(matched);
    start = matched_end;
  }
}

TokenSeq original_wordpiece_word(const Vocabulary& vocab, std::u32string_view w) {
  TokenSeq out;
  original_wordpiece_word_into(vocab, w, out);
  return out;
}

MinPopResult minpop_g(const Vocabulary& vocab, const Trie& trie,
                      std::u32string_view w) {
  MinPopResult res;
  std::u32string cur(w);
  while (true) {
    const NodeId node = trie.find(cur);
    if (node != kNoNode) {
      res.landing = node;
      return res;
    }
    const TokenId p = longest_prefix_p(vocab, cur);
    if (p == kNoToken) {
      res.landing = kNoNode;
      return res;
    }
    res.pops.push_back(p);
    cur = vocab.suffix_indicator() + cur.substr(vocab.token(p).size());
  }
}

MinPopResult onestep_h(const Vocabulary& vocab, const Trie& trie, NodeId u,
                       char32_t c) {
  if (u == kNoNode) {
    return {};
  }
  std::u32string w = trie.node_string(u);
  w.push_back(c);
  return minpop_g(vocab, trie, w);
}

Trie with_boundary_nodes(const Trie& trie, const Vocabulary& vocab) {
  Trie augmented = trie;
  const char32_t boundary = vocab.boundary_char();
  augmented.insert_path(std::u32string_view(&boundary, 1));
  std::u32string suffixed = vocab.suffix_indicator();
  suffixed.push_back(boundary);
  augmented.insert_path(suffixed);
  return augmented;
}

std::vector<std::u32string> pretokenize(const Vocabulary& vocab,
                                        std::u32string_view text) {
  std::vector<std::u32string> words;
  std::u32string cur;
  const auto flush = [&] {
    if (!cur.empty()) {
      words.push_back(cur);
      cur.clear();
    }
  };
  for (char32_t c : text) {
    if (c == vocab.boundary_char() || is_space_char(c)) {
      flush();
    } else if (is_punct_char(c)) {
      flush();
      words.push_back(std::u32string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return words;
}

void e2e_reference_into(const Vocabulary& vocab, std::u32string_view text,
                        TokenSeq& out) {
  out.clear();
  TokenSeq word_tokens;
  for (const auto& word : pretokenize(vocab, text)) {
    original_wordpiece_word_into(vocab, word, word_tokens);
    out.insert(out.end(), word_tokens.begin(), word_tokens.end());
  }
}

TokenSeq e2e_reference(const Vocabulary& vocab, std::u32string_view text) {
  TokenSeq out;
  e2e_reference_into(vocab, text, out);
  return out;
}

}  // namespace wordpiece::oracle
