#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordpiece {

using TokenId = std::int32_t;
inline constexpr TokenId kNoToken = -1;

using TokenSeq = std::vector<TokenId>;

struct VocabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VocabConfig {
  std::u32string suffix_indicator = U"##";
  std::u32string unk_token = U"[UNK]";
  char32_t boundary_char = U' ';
  // Words longer than this (in code points) map straight to unk.
  std::optional<std::size_t> max_word_length;
};

// Immutable token table. Ids are file line numbers; unk is appended when the
// file does not contain it. All strings are handled as code point sequences.
class Vocabulary {
 public:
  // Parses one token per line from UTF-8 `text`. Duplicate tokens keep their
  // first id and are reported through `diagnostics` (when given) rather than
  // failing the load. Blank lines and empty input are errors, as is a token
  // containing the boundary character.
  static Vocabulary load(std::string_view text, const VocabConfig& config,
                         std::vector<std::string>* diagnostics = nullptr);

  // Builds directly from decoded tokens; same validation as load().
  static Vocabulary from_tokens(std::vector<std::u32string> tokens,
                                const VocabConfig& config,
                                std::vector<std::string>* diagnostics = nullptr);

  std::size_t size() const { return tokens_.size(); }
  const std::u32string& token(TokenId id) const { return tokens_[static_cast<std::size_t>(id)]; }
  const std::vector<std::u32string>& tokens() const { return tokens_; }

  TokenId id_of(std::u32string_view token) const {
    auto it = id_of_.find(token);
    return it == id_of_.end() ? kNoToken : it->second;
  }
  bool contains(std::u32string_view token) const { return id_of(token) != kNoToken; }

  TokenId unk_id() const { return unk_id_; }
  const std::u32string& unk_token() const { return tokens_[static_cast<std::size_t>(unk_id_)]; }
  const std::u32string& suffix_indicator() const { return config_.suffix_indicator; }
  char32_t boundary_char() const { return config_.boundary_char; }
  std::optional<std::size_t> max_word_length() const { return config_.max_word_length; }
  const VocabConfig& config() const { return config_; }

  // m and M from the derived stats: per-token length excludes the suffix
  // indicator prefix, so token_length("##") == 0.
  std::size_t max_token_length() const { return max_token_length_; }
  std::size_t total_token_length() const { return total_token_length_; }

  // Canonical text form: tokens joined by newlines. load(to_text(v)) == v.
  std::string to_text() const;

 private:
  struct TransparentHash {
    using is_transparent = void;
    std::size_t operator()(std::u32string_view s) const {
      std::size_t h = 1469598103934665603ull;
      for (char32_t c : s) {
        h ^= static_cast<std::size_t>(c);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  std::vector<std::u32string> tokens_;
  std::unordered_map<std::u32string, TokenId, TransparentHash, std::equal_to<>> id_of_;
  TokenId unk_id_ = kNoToken;
  VocabConfig config_;
  std::size_t max_token_length_ = 0;
  std::size_t total_token_length_ = 0;
};

// Token length in code points, with the suffix indicator prefix not counted
// when present: token_length("##d") == 1.
std::size_t token_length(const Vocabulary& vocab, std::u32string_view token);

}  // namespace wordpiece
