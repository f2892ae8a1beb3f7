#include "wordpiece/vocab.hpp"

#include "wordpiece/utf8.hpp"

namespace wordpiece {

namespace {

bool starts_with(std::u32string_view s, std::u32string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

}  // namespace

std::size_t token_length(const Vocabulary& vocab, std::u32string_view token) {
  const auto& indicator = vocab.suffix_indicator();
  if (!indicator.empty() && starts_with(token, indicator)) {
    return token.size() - indicator.size();
  }
  return token.size();
}

Vocabulary Vocabulary::load(std::string_view text, const VocabConfig& config,
                            std::vector<std::string>* diagnostics) {
  if (text.empty()) {
    throw VocabError("vocabulary file is empty");
  }
  std::vector<std::u32string> tokens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line;
    if (eol == std::string_view::npos) {
      if (pos == text.size()) {
        break;  // trailing newline, no final line
      }
      line = text.substr(pos);
      pos = text.size() + 1;
    } else {
      line = text.substr(pos, eol - pos);
      pos = eol + 1;
    }
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    tokens.push_back(decode_utf8(line));
  }
  return from_tokens(std::move(tokens), config, diagnostics);
}

Vocabulary Vocabulary::from_tokens(std::vector<std::u32string> tokens,
                                   const VocabConfig& config,
                                   std::vector<std::string>* diagnostics) {
  if (tokens.empty()) {
    throw VocabError("vocabulary file is empty");
  }
  if (config.suffix_indicator.find(config.boundary_char) != std::u32string::npos) {
    throw VocabError("suffix indicator contains the boundary character");
  }
  if (config.unk_token.empty()) {
    throw VocabError("unk token must be non-empty");
  }

  Vocabulary vocab;
  vocab.config_ = config;
  vocab.tokens_.reserve(tokens.size() + 1);
  std::size_t line_no = 0;
  for (auto& tok : tokens) {
    ++line_no;
    if (tok.empty()) {
      throw VocabError("blank line " + std::to_string(line_no) + " in vocabulary");
    }
    if (tok.find(config.boundary_char) != std::u32string::npos) {
      throw VocabError("token on line " + std::to_string(line_no) +
                       " contains the boundary character: \"" + encode_utf8(tok) + "\"");
    }
    auto [it, inserted] =
        vocab.id_of_.try_emplace(tok, static_cast<TokenId>(vocab.tokens_.size()));
    if (!inserted) {
      if (diagnostics != nullptr) {
        diagnostics->push_back("duplicate token \"" + encode_utf8(tok) + "\" on line " +
                               std::to_string(line_no) + " (keeping id " +
                               std::to_string(it->second) + ")");
      }
      continue;
    }
    vocab.tokens_.push_back(std::move(tok));
  }

  if (auto it = vocab.id_of_.find(config.unk_token); it != vocab.id_of_.end()) {
    vocab.unk_id_ = it->second;
  } else {
    if (config.unk_token.find(config.boundary_char) != std::u32string::npos) {
      throw VocabError("unk token contains the boundary character");
    }
    vocab.unk_id_ = static_cast<TokenId>(vocab.tokens_.size());
    vocab.id_of_.emplace(config.unk_token, vocab.unk_id_);
    vocab.tokens_.push_back(config.unk_token);
  }

  // m and M cover the matchable set; unk is an id but never matches.
  for (std::size_t id = 0; id < vocab.tokens_.size(); ++id) {
    if (static_cast<TokenId>(id) == vocab.unk_id_) {
      continue;
    }
    const std::size_t len = token_length(vocab, vocab.tokens_[id]);
    vocab.max_token_length_ = std::max(vocab.max_token_length_, len);
    vocab.total_token_length_ += len;
  }
  return vocab;
}

std::string Vocabulary::to_text() const {
  std::string out;
  for (const auto& tok : tokens_) {
    out += encode_utf8(tok);
    out.push_back('\n');
  }
  return out;
}

}  // namespace wordpiece
