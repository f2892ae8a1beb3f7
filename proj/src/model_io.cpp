#include "wordpiece/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wordpiece/oracle.hpp"
#include "wordpiece/utf8.hpp"

namespace wordpiece {

namespace {

constexpr char kMagic[8] = {'w', 'p', 't', 'o', 'k', 'm', 'd', 'l'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void bytes(const void* data, std::size_t n) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  }
  void u8(std::uint8_t v) { bytes(&v, 1); }
  void u32(std::uint32_t v) {
    const std::uint8_t b[4] = {static_cast<std::uint8_t>(v),
                               static_cast<std::uint8_t>(v >> 8),
                               static_cast<std::uint8_t>(v >> 16),
                               static_cast<std::uint8_t>(v >> 24)};
    bytes(b, 4);
  }
  void u64(std::uint64_t v) {
    u32(static_cast<std::uint32_t>(v));
    u32(static_cast<std::uint32_t>(v >> 32));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void bytes(void* data, std::size_t n) {
    in_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (!in_) {
      throw ModelIoError("model file truncated");
    }
  }
  std::uint8_t u8() {
    std::uint8_t v;
    bytes(&v, 1);
    return v;
  }
  std::uint32_t u32() {
    std::uint8_t b[4];
    bytes(b, 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
  }
  std::uint64_t u64() {
    const std::uint64_t lo = u32();
    return lo | (static_cast<std::uint64_t>(u32()) << 32);
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  std::string str() {
    std::string s(u32(), '\0');
    if (!s.empty()) {
      bytes(s.data(), s.size());
    }
    return s;
  }

 private:
  std::istream& in_;
};

}  // namespace

struct TrieSerialization {
  static void save(const Trie& trie, Writer& w) {
    w.u32(static_cast<std::uint32_t>(trie.size()));
    w.i32(trie.root());
    w.i32(trie.suffix_root());
    for (std::size_t v = 0; v < trie.size(); ++v) {
      const TrieNode& n = trie.node(static_cast<NodeId>(v));
      w.i32(n.parent);
      w.u32(static_cast<std::uint32_t>(n.label));
      w.i32(n.token);
      w.i32(n.depth);
    }
  }

  static Trie load(Reader& r) {
    Trie trie;
    const std::uint32_t count = r.u32();
    trie.root_ = r.i32();
    trie.suffix_root_ = r.i32();
    trie.nodes_.resize(count);
    for (std::uint32_t v = 0; v < count; ++v) {
      TrieNode& n = trie.nodes_[v];
      n.parent = r.i32();
      n.label = static_cast<char32_t>(r.u32());
      n.token = r.i32();
      n.depth = r.i32();
      if (n.parent != kNoNode &&
          (n.parent < 0 || static_cast<std::uint32_t>(n.parent) >= count)) {
        throw ModelIoError("trie parent out of range");
      }
    }
    if (trie.root_ < 0 || static_cast<std::uint32_t>(trie.root_) >= count ||
        trie.suffix_root_ < 0 ||
        static_cast<std::uint32_t>(trie.suffix_root_) >= count) {
      throw ModelIoError("trie roots out of range");
    }
    for (std::uint32_t v = 0; v < count; ++v) {
      const TrieNode& n = trie.nodes_[v];
      if (n.parent != kNoNode) {
        trie.nodes_[static_cast<std::size_t>(n.parent)].edges.push_back(
            {n.label, static_cast<NodeId>(v)});
      }
    }
    for (auto& node : trie.nodes_) {
      std::sort(node.edges.begin(), node.edges.end());
    }
    return trie;
  }
};

struct FailureSerialization {
  static void save(const FailureTable& table, Writer& w) {
    w.u32(static_cast<std::uint32_t>(table.fail_.size()));
    for (std::size_t v = 0; v < table.fail_.size(); ++v) {
      w.i32(table.fail_[v]);
      w.u32(table.spans_[v].first);
      w.u32(table.spans_[v].second);
    }
    w.u32(static_cast<std::uint32_t>(table.pool_.size()));
    for (TokenId id : table.pool_) {
      w.i32(id);
    }
  }

  static FailureTable load(Reader& r, std::size_t node_count) {
    const std::uint32_t count = r.u32();
    if (count != node_count) {
      throw ModelIoError("failure table size does not match trie");
    }
    FailureTable table(count);
    for (std::uint32_t v = 0; v < count; ++v) {
      table.fail_[v] = r.i32();
      table.spans_[v] = {r.u32(), r.u32()};
      if (table.fail_[v] != kNoNode &&
          (table.fail_[v] < 0 || static_cast<std::uint32_t>(table.fail_[v]) >= count)) {
        throw ModelIoError("failure link out of range");
      }
    }
    const std::uint32_t pool = r.u32();
    table.pool_.resize(pool);
    for (std::uint32_t i = 0; i < pool; ++i) {
      table.pool_[i] = r.i32();
    }
    for (const auto& [offset, len] : table.spans_) {
      if (static_cast<std::uint64_t>(offset) + len > pool) {
        throw ModelIoError("failure pops span out of range");
      }
    }
    return table;
  }
};

struct FstSerialization {
  static void save(const FstTable& fst, Writer& w) {
    w.u32(static_cast<std::uint32_t>(fst.alphabet_.size()));
    for (char32_t c : fst.alphabet_) {
      w.u32(static_cast<std::uint32_t>(c));
    }
    w.u32(static_cast<std::uint32_t>(fst.state_count_));
    w.i32(fst.end_root_);
    w.i32(fst.end_suffix_);
    for (NodeId v : fst.next_) {
      w.i32(v);
    }
    for (const auto& [offset, len] : fst.out_spans_) {
      w.u32(offset);
      w.u32(len);
    }
    for (const auto& [offset, len] : fst.dead_spans_) {
      w.u32(offset);
      w.u32(len);
    }
    w.u32(static_cast<std::uint32_t>(fst.pool_.size()));
    for (TokenId id : fst.pool_) {
      w.i32(id);
    }
  }

  static FstTable load(Reader& r) {
    FstTable fst;
    const std::uint32_t alphabet = r.u32();
    fst.alphabet_.resize(alphabet);
    for (std::uint32_t i = 0; i < alphabet; ++i) {
      fst.alphabet_[i] = static_cast<char32_t>(r.u32());
    }
    fst.state_count_ = r.u32();
    fst.end_root_ = r.i32();
    fst.end_suffix_ = r.i32();
    const std::size_t cells = fst.state_count_ * alphabet;
    fst.next_.resize(cells);
    for (auto& v : fst.next_) {
      v = r.i32();
    }
    fst.out_spans_.resize(cells);
    for (auto& span : fst.out_spans_) {
      span = {r.u32(), r.u32()};
    }
    fst.dead_spans_.resize(fst.state_count_);
    for (auto& span : fst.dead_spans_) {
      span = {r.u32(), r.u32()};
    }
    const std::uint32_t pool = r.u32();
    fst.pool_.resize(pool);
    for (auto& id : fst.pool_) {
      id = r.i32();
    }
    return fst;
  }
};

struct ModelSerialization {
  static void save(const TokenizerModel& model, std::ostream& out) {
    Writer w(out);
    w.bytes(kMagic, sizeof(kMagic));
    w.u32(kVersion);

    const Vocabulary& vocab = model.vocab();
    w.u32(static_cast<std::uint32_t>(vocab.size()));
    for (const auto& tok : vocab.tokens()) {
      w.str(encode_utf8(tok));
    }
    w.str(encode_utf8(vocab.suffix_indicator()));
    w.str(encode_utf8(vocab.unk_token()));
    w.u32(static_cast<std::uint32_t>(vocab.boundary_char()));
    w.u8(vocab.max_word_length().has_value() ? 1 : 0);
    w.u64(vocab.max_word_length().value_or(0));

    TrieSerialization::save(model.trie(), w);
    FailureSerialization::save(model.failure(), w);

    w.u8(model.is_e2e() ? 1 : 0);
    if (model.is_e2e()) {
      const E2EAugmentation& aug = model.e2e();
      w.i32(aug.punct_root);
      w.u32(static_cast<std::uint32_t>(aug.punct_leaves.size()));
      for (const auto& [c, leaf] : aug.punct_leaves) {
        w.u32(static_cast<std::uint32_t>(c));
        w.i32(leaf);
      }
    }

    w.u8(model.fst() != nullptr ? 1 : 0);
    if (model.fst() != nullptr) {
      FstSerialization::save(*model.fst(), w);
    }
    out.flush();
  }

  static TokenizerModel load(std::istream& in) {
    Reader r(in);
    char magic[8];
    r.bytes(magic, sizeof(magic));
    if (!std::equal(magic, magic + 8, kMagic)) {
      throw ModelIoError("not a tokenizer model file");
    }
    if (r.u32() != kVersion) {
      throw ModelIoError("unsupported model version");
    }

    const std::uint32_t token_count = r.u32();
    std::vector<std::u32string> tokens;
    tokens.reserve(token_count);
    for (std::uint32_t i = 0; i < token_count; ++i) {
      tokens.push_back(decode_utf8(r.str()));
    }
    VocabConfig config;
    config.suffix_indicator = decode_utf8(r.str());
    config.unk_token = decode_utf8(r.str());
    config.boundary_char = static_cast<char32_t>(r.u32());
    const bool has_cap = r.u8() != 0;
    const std::uint64_t cap = r.u64();
    if (has_cap) {
      config.max_word_length = static_cast<std::size_t>(cap);
    }

    TokenizerModel model;
    model.vocab_ = Vocabulary::from_tokens(std::move(tokens), config);
    model.trie_ = TrieSerialization::load(r);
    model.failure_ = FailureSerialization::load(r, model.trie_.size());

    if (r.u8() != 0) {
      E2EAugmentation aug;
      aug.punct_root = r.i32();
      const std::uint32_t leaves = r.u32();
      aug.punct_leaves.reserve(leaves);
      for (std::uint32_t i = 0; i < leaves; ++i) {
        const char32_t c = static_cast<char32_t>(r.u32());
        aug.punct_leaves.push_back({c, r.i32()});
      }
      model.e2e_ = std::move(aug);
    }
    if (r.u8() != 0) {
      model.fst_ = FstSerialization::load(r);
    }
    model.suffix_indicator_tokens_ = oracle::original_wordpiece_word(
        model.vocab_, model.vocab_.suffix_indicator());
    return model;
  }
};

void save_model(const TokenizerModel& model, std::ostream& out) {
  ModelSerialization::save(model, out);
  if (!out) {
    throw ModelIoError("failed to write model");
  }
}

TokenizerModel load_model(std::istream& in) { return ModelSerialization::load(in); }

void save_model_file(const TokenizerModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ModelIoError("cannot open " + path + " for writing");
  }
  save_model(model, out);
}

TokenizerModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ModelIoError("cannot open " + path);
  }
  return load_model(in);
}

std::string serialize_model(const TokenizerModel& model) {
  std::ostringstream out(std::ios::binary);
  save_model(model, out);
  return std::move(out).str();
}

TokenizerModel deserialize_model(std::string_view bytes) {
  std::istringstream in(std::string(bytes), std::ios::binary);
  return load_model(in);
}

}  // namespace wordpiece
