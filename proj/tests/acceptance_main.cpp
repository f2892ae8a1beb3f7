// Acceptance suite: every release gate as one numbered check with a
// pass/fail line. Run with no arguments for all checks, or with a list of
// check numbers. Exits nonzero if any selected check fails.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_util.hpp"
#include "wordpiece/bench.hpp"
#include "wordpiece/corpus.hpp"
#include "wordpiece/e2e.hpp"
#include "wordpiece/failure.hpp"
#include "wordpiece/model_io.hpp"
#include "wordpiece/oracle.hpp"
#include "wordpiece/utf8.hpp"

using namespace wordpiece;
using namespace wordpiece::testutil;

namespace {

struct CheckContext {
  std::string detail;
  bool ok = true;

  void fail(const std::string& message) {
    ok = false;
    if (!detail.empty()) {
      detail += "; ";
    }
    detail += message;
  }

  void expect(bool condition, const std::string& message) {
    if (!condition) {
      fail(message);
    }
  }
};

// Applied to every model before use, so the whole suite can be re-run on
// serialized-then-deserialized models (check 9).
using ModelTransform = std::function<TokenizerModel(TokenizerModel)>;

TokenizerModel identity(TokenizerModel model) { return model; }

TokenizerModel roundtrip(TokenizerModel model) {
  return deserialize_model(serialize_model(model));
}

std::string show(const Vocabulary& vocab, const TokenSeq& seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) {
      out += " ";
    }
    out += encode_utf8(vocab.token(seq[i]));
  }
  return out + "]";
}

// --- check 1: golden failure table --------------------------------------

void check_golden_failure_table(CheckContext& ctx, const ModelTransform& transform) {
  const TokenizerModel model = transform(fig1_model());
  const Trie& trie = model.trie();
  const FailureTable& table = model.failure();
  const Vocabulary& vocab = model.vocab();

  ctx.expect(trie.size() == 14, "expected 14 trie nodes");

  struct Row {
    std::u32string chi;
    bool has_link;
    std::u32string link;
    std::vector<std::u32string> pops;
  };
  const std::vector<Row> fig1b = {
      {U"", false, {}, {}},           {U"#", false, {}, {}},
      {U"##", false, {}, {}},         {U"a", true, U"##", {U"a"}},
      {U"ab", true, U"##b", {U"a"}},  {U"abc", true, U"##c", {U"a", U"##b"}},
      {U"abcd", true, U"##cd", {U"a", U"##b"}},
      {U"abcdx", true, U"##", {U"abcdx"}},
      {U"##b", true, U"##", {U"##b"}},
      {U"##c", true, U"##", {U"##c"}},
      {U"##cd", true, U"##d", {U"##c"}},
      {U"##cdy", true, U"##", {U"##cdy"}},
      {U"##d", false, {}, {}},
      {U"##dz", true, U"##", {U"##dz"}},
  };
  for (const auto& row : fig1b) {
    const NodeId v = trie.find(row.chi);
    if (v == kNoNode) {
      ctx.fail("missing node " + encode_utf8(row.chi));
      continue;
    }
    const NodeId expected_link = row.has_link ? trie.find(row.link) : kNoNode;
    if (table.link(v) != expected_link) {
      ctx.fail("wrong failure link at \"" + encode_utf8(row.chi) + "\"");
    }
    const auto pops = table.pops(v);
    if (TokenSeq(pops.begin(), pops.end()) != ids(vocab, row.pops)) {
      ctx.fail("wrong failure pops at \"" + encode_utf8(row.chi) + "\"");
    }
  }
  ctx.detail = ctx.ok ? "14/14 node rows match" : ctx.detail;
}

// --- check 2: golden matching tables -------------------------------------

void check_golden_matching_tables(CheckContext& ctx, const ModelTransform& transform) {
  const TokenizerModel model = transform(fig1_model({.fst = true}));
  const Vocabulary& vocab = model.vocab();
  const Trie augmented = oracle::with_boundary_nodes(model.trie(), vocab);

  const auto at = [&](std::u32string_view s) { return augmented.find(s); };

  // MinPop table: w -> (landing, pops)
  struct GRow {
    std::u32string w;
    bool lands;
    std::u32string landing;
    std::vector<std::u32string> pops;
  };
  const std::vector<GRow> g_table = {
      {U"abcd", true, U"abcd", {}},
      {U"##bcd", true, U"##cd", {U"##b"}},
      {U"##cdz", true, U"##dz", {U"##c"}},
      {U"##bcdz", true, U"##dz", {U"##b", U"##c"}},
      {U"z", false, {}, {}},
  };
  for (const auto& row : g_table) {
    const auto res = oracle::minpop_g(vocab, augmented, row.w);
    const NodeId expected = row.lands ? at(row.landing) : kNoNode;
    if (res.landing != expected || res.pops != ids(vocab, row.pops)) {
      ctx.fail("minpop mismatch at \"" + encode_utf8(row.w) + "\"");
    }
  }

  // One-step table: (u, c) -> (landing, pops); the boundary entry lands on
  // the indicator-plus-boundary node.
  struct HRow {
    std::u32string u;
    char32_t c;
    bool lands;
    std::u32string landing;
    std::vector<std::u32string> pops;
  };
  const std::vector<HRow> h_table = {
      {U"##b", U'c', true, U"##c", {U"##b"}},
      {U"##c", U'd', true, U"##cd", {}},
      {U"##cd", U'z', true, U"##dz", {U"##c"}},
      {U"##dz", U' ', true, U"## ", {U"##dz"}},
      {U"abcd", U'z', true, U"##dz", {U"a", U"##b", U"##c"}},
      {U"", U'z', false, {}, {}},
  };
  for (const auto& row : h_table) {
    const auto res = oracle::onestep_h(vocab, augmented, at(row.u), row.c);
    const NodeId expected = row.lands ? at(row.landing) : kNoNode;
    if (res.landing != expected || res.pops != ids(vocab, row.pops)) {
      ctx.fail("one-step mismatch at (\"" + encode_utf8(row.u) + "\", " +
               encode_utf8(std::u32string(1, row.c)) + ")");
    }
  }

  // The same six entries from the compiled transition tables; the boundary
  // entry lands on the suffix word-end state.
  const FstTable* fst = model.fst();
  if (fst == nullptr) {
    ctx.fail("model lost its FST tables");
    return;
  }
  const Trie& trie = model.trie();
  for (const auto& row : h_table) {
    const auto cell = fst->step(trie.find(row.u), row.c);
    NodeId expected;
    if (!row.lands) {
      expected = kNoNode;
    } else if (row.c == vocab.boundary_char()) {
      expected = fst->end_state_suffix();
    } else {
      expected = trie.find(row.landing);
    }
    if (cell.next != expected ||
        TokenSeq(cell.out.begin(), cell.out.end()) != ids(vocab, row.pops)) {
      ctx.fail("fst mismatch at (\"" + encode_utf8(row.u) + "\", " +
               encode_utf8(std::u32string(1, row.c)) + ")");
    }
  }
  ctx.detail = ctx.ok ? "5 minpop + 6 one-step + 6 fst entries match" : ctx.detail;
}

// --- check 3: exhaustive differential ------------------------------------

void check_exhaustive_differential(CheckContext& ctx, const ModelTransform& transform) {
  // 10-token pool over {a, b, c} with the "##" indicator; all vocabularies
  // of size 1..6; all words of length 0..8 over {a, b, c}.
  const std::vector<std::u32string> pool = {
      U"a", U"b", U"c", U"aa", U"ab", U"abc", U"##a", U"##c", U"##ab", U"##bc"};
  const auto subsets = all_vocab_subsets(pool, 6);
  const auto words = all_words(U"abc", 8);

  std::uint64_t mismatches = 0;
  std::uint64_t checked = 0;
  TokenSeq lin, fst, naive;
  for (const auto& lines : subsets) {
    const TokenizerModel model =
        transform(TokenizerModel::build(make_vocab(lines), {.fst = true}));
    const Vocabulary& vocab = model.vocab();
    for (const auto& w : words) {
      tokenize_word_into(model, w, lin);
      tokenize_word_fst_into(model, w, fst);
      oracle::original_wordpiece_word_into(vocab, w, naive);
      const bool same = lin == fst && lin == naive &&
                        lin == oracle::maxmatch_recursive(vocab, w);
      if (!same) {
        ++mismatches;
        if (mismatches == 1) {
          ctx.fail("first mismatch: vocab size " + std::to_string(lines.size()) +
                   ", word \"" + encode_utf8(w) + "\" -> " + show(vocab, lin));
        }
      }
      ++checked;
    }
  }
  ctx.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (ctx.ok) {
    ctx.detail = std::to_string(subsets.size()) + " vocabularies x " +
                 std::to_string(words.size()) + " words = " +
                 std::to_string(checked) + " comparisons, all four engines agree";
  }
}

// --- check 4: end-to-end differential ------------------------------------

void check_e2e_differential(CheckContext& ctx, const ModelTransform& transform) {
  const std::vector<std::u32string> pool = {
      U"a",  U"b",  U"ab", U"ba", U"aab", U"##a", U"##b", U"##ab",
      U"!",  U".",  U"a.", U"#"};
  std::mt19937_64 rng(20240817);
  static constexpr std::u32string_view kChars = U"ab!. ";
  std::uniform_int_distribution<std::size_t> len_dist(0, 40);
  std::uniform_int_distribution<std::size_t> char_dist(0, kChars.size() - 1);

  std::uint64_t mismatches = 0;
  const int kCases = 10000;
  TokenizerModel model = transform(
      TokenizerModel::build(make_vocab(random_vocab_lines(rng, pool, 6)), {.e2e = true}));
  for (int i = 0; i < kCases; ++i) {
    if (i % 100 == 0) {
      model = transform(TokenizerModel::build(
          make_vocab(random_vocab_lines(rng, pool, 6)), {.e2e = true}));
    }
    std::u32string text;
    const std::size_t len = len_dist(rng);
    for (std::size_t k = 0; k < len; ++k) {
      text.push_back(kChars[char_dist(rng)]);
    }
    if (tokenize_text(model, text) != oracle::e2e_reference(model.vocab(), text)) {
      ++mismatches;
      if (mismatches == 1) {
        ctx.fail("first mismatch on \"" + encode_utf8(text) + "\"");
      }
    }
  }
  ctx.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (ctx.ok) {
    ctx.detail = std::to_string(kCases) + " random texts match the reference";
  }
}

// --- check 5: definitional property suite ----------------------------------------

void check_definitional_properties(CheckContext& ctx, const ModelTransform&) {
  const std::vector<std::u32string> pool = {
      U"a", U"b", U"c", U"aa", U"ab", U"abc", U"abca", U"bca", U"##a", U"##b",
      U"##c", U"##ab", U"##bc", U"##bca", U"#", U"#a", U"##", U"cc"};
  std::mt19937_64 rng(0xACCE7);
  const int kCases = 10000;

  // Appending a character that breaks the token extends q and keeps p.
  int done = 0;
  while (done < kCases) {
    const Vocabulary vocab = make_vocab(random_vocab_lines(rng, pool, 6));
    for (int i = 0; i < 25 && done < kCases; ++i) {
      const std::u32string w = random_word(rng, U"abc#", 7);
      std::uniform_int_distribution<int> cd(0, 3);
      const char32_t c = U"abc#"[cd(rng)];
      const std::u32string wc = w + c;
      if (vocab.contains(wc) || wc == vocab.suffix_indicator()) {
        continue;
      }
      const TokenId pw = oracle::longest_prefix_p(vocab, w);
      if (oracle::longest_prefix_p(vocab, wc) != pw) {
        ctx.fail("prefix-extension mismatch at \"" + encode_utf8(wc) + "\"");
      }
      if (pw != kNoToken &&
          oracle::suffix_q(vocab, wc) != oracle::suffix_q(vocab, w) + c) {
        ctx.fail("suffix-extension mismatch at \"" + encode_utf8(wc) + "\"");
      }
      ++done;
    }
  }

  // MaxMatch computed via minpop matching on the boundary-augmented trie.
  done = 0;
  while (done < kCases) {
    const Vocabulary vocab = make_vocab(random_vocab_lines(rng, pool, 6));
    const Trie trie = oracle::with_boundary_nodes(Trie::build(vocab), vocab);
    for (int i = 0; i < 25 && done < kCases; ++i) {
      const std::u32string w = random_word(rng, U"abc#", 8);
      if (w == vocab.suffix_indicator()) {
        continue;
      }
      const auto res = oracle::minpop_g(vocab, trie, w + vocab.boundary_char());
      const TokenSeq expected =
          res.landing == kNoNode ? TokenSeq{vocab.unk_id()} : res.pops;
      if (oracle::maxmatch_recursive(vocab, w) != expected) {
        ctx.fail("minpop-matching mismatch at \"" + encode_utf8(w) + "\"");
      }
      ++done;
    }
  }

  // One-character decomposition of minpop matching.
  done = 0;
  while (done < kCases) {
    const Vocabulary vocab = make_vocab(random_vocab_lines(rng, pool, 6));
    const Trie trie = oracle::with_boundary_nodes(Trie::build(vocab), vocab);
    for (int i = 0; i < 25 && done < kCases; ++i) {
      const std::u32string w = random_word(rng, U"abc#", 7);
      std::uniform_int_distribution<int> cd(0, 3);
      const char32_t c = U"abc#"[cd(rng)];
      const auto gw = oracle::minpop_g(vocab, trie, w);
      const auto gwc = oracle::minpop_g(vocab, trie, w + c);
      const auto step = oracle::onestep_h(vocab, trie, gw.landing, c);
      if (gwc.landing != step.landing) {
        ctx.fail("one-step landing mismatch at \"" + encode_utf8(w + c) + "\"");
      }
      if (gwc.landing != kNoNode) {
        TokenSeq combined = gw.pops;
        combined.insert(combined.end(), step.pops.begin(), step.pops.end());
        if (gwc.pops != combined) {
          ctx.fail("one-step pops mismatch at \"" + encode_utf8(w + c) + "\"");
        }
      }
      ++done;
    }
  }

  // The one-step landing via the failure cascade equals the definition,
  // with pops equal on every landing transition.
  done = 0;
  while (done < kCases) {
    const Vocabulary vocab = make_vocab(random_vocab_lines(rng, pool, 6));
    const Trie trie = Trie::build(vocab);
    const FailureTable table = precompute(trie, vocab);
    const Trie augmented = oracle::with_boundary_nodes(trie, vocab);
    std::set<char32_t> alphabet;
    for (const auto& tok : vocab.tokens()) {
      for (char32_t c : tok) {
        alphabet.insert(c);
      }
    }
    for (std::size_t v = 0; v < trie.size() && done < kCases; ++v) {
      for (const char32_t c : alphabet) {
        NodeId z = static_cast<NodeId>(v);
        TokenSeq pops;
        NodeId landing = kNoNode;
        while (true) {
          const NodeId child = trie.child(z, c);
          if (child != kNoNode) {
            landing = child;
            break;
          }
          if (table.link(z) == kNoNode) {
            break;
          }
          const auto f_pops = table.pops(z);
          pops.insert(pops.end(), f_pops.begin(), f_pops.end());
          z = table.link(z);
        }
        const auto h = oracle::onestep_h(vocab, augmented, static_cast<NodeId>(v), c);
        if (landing != h.landing) {
          ctx.fail("cascade landing mismatch");
        }
        if (landing != kNoNode && pops != h.pops) {
          ctx.fail("cascade pops mismatch");
        }
        ++done;
      }
    }
  }

  // The BFS precomputation equals the definitional slow path.
  done = 0;
  while (done < kCases) {
    const Vocabulary vocab = make_vocab(random_vocab_lines(rng, pool, 6));
    const Trie trie = Trie::build(vocab);
    const FailureTable table = precompute(trie, vocab);
    for (std::size_t v = 0; v < trie.size() && done < kCases; ++v) {
      const NodeId id = static_cast<NodeId>(v);
      if (id == trie.root() || id == trie.suffix_root()) {
        continue;
      }
      const auto [link, pops] = failure_by_definition(trie, vocab, id);
      if (table.link(id) != link) {
        ctx.fail("precompute link mismatch at \"" + encode_utf8(trie.node_string(id)) + "\"");
      }
      if (link != kNoNode) {
        const auto span = table.pops(id);
        if (TokenSeq(span.begin(), span.end()) != pops) {
          ctx.fail("precompute pops mismatch at \"" + encode_utf8(trie.node_string(id)) + "\"");
        }
      }
      ++done;
    }
  }

  if (ctx.ok) {
    ctx.detail = "five definitional properties, 10000 randomized cases each";
  }
}

// --- check 6: linearity ----------------------------------------------------

void check_linearity(CheckContext& ctx, const ModelTransform& transform) {
  const std::vector<std::size_t> lengths = {64, 128, 256, 512};
  const GeneratedCorpus corpus = adversarial_corpus(lengths, 16);
  const TokenizerModel model =
      transform(TokenizerModel::build(make_vocab(corpus.vocab_lines)));

  // Exact part first: failure transitions never exceed normal ones.
  for (const auto& w : corpus.inputs) {
    MatchStats stats;
    tokenize_word(model, w, &stats);
    if (stats.failure_transitions > stats.normal_transitions) {
      ctx.fail("failure transitions exceed normal transitions on length " +
               std::to_string(w.size()));
      break;
    }
  }

  BenchOptions options;
  options.repeats = 3;
  options.min_batch_seconds = 0.02;
  const BenchReport report =
      run_bench(model, corpus.inputs, {Engine::Linmax, Engine::Naive}, options);

  const auto& lin = report.engines[0].buckets;
  const auto& naive = report.engines[1].buckets;
  std::string growth = "growth per doubling linmax:";
  for (std::size_t i = 1; i < lin.size(); ++i) {
    const double ratio = lin[i].mean_ns / lin[i - 1].mean_ns;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " %.2fx", ratio);
    growth += buf;
    if (ratio > 2.5) {
      ctx.fail("linmax grew " + std::string(buf) + " from length " +
               std::to_string(lin[i - 1].length));
    }
  }
  growth += ", naive:";
  for (std::size_t i = 1; i < naive.size(); ++i) {
    const double ratio = naive[i].mean_ns / naive[i - 1].mean_ns;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " %.2fx", ratio);
    growth += buf;
    if (ratio < 3.0) {
      ctx.fail("naive grew only " + std::string(buf) + " from length " +
               std::to_string(naive[i - 1].length));
    }
  }
  ctx.detail = growth;
}

// --- check 7: speedup direction ---------------------------------------------

void check_speedup_direction(CheckContext& ctx, const ModelTransform& transform) {
  BenchOptions options;
  options.repeats = 3;
  options.min_batch_seconds = 0.02;

  const GeneratedCorpus adversarial = adversarial_corpus({64}, 64);
  const TokenizerModel adv_model =
      transform(TokenizerModel::build(make_vocab(adversarial.vocab_lines)));
  const BenchReport adv = run_bench(adv_model, adversarial.inputs,
                                    {Engine::Linmax, Engine::Naive}, options);
  const double adv_ratio = adv.engines[0].mean_ns / adv.engines[1].mean_ns;

  const GeneratedCorpus natural = natural_corpus(4096, 20240817);
  const TokenizerModel nat_model =
      transform(TokenizerModel::build(make_vocab(natural.vocab_lines)));
  const BenchReport nat = run_bench(nat_model, natural.inputs,
                                    {Engine::Linmax, Engine::Naive}, options);
  const double nat_ratio = nat.engines[0].mean_ns / nat.engines[1].mean_ns;

  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "adversarial n=64 linmax/naive %.3f (need <= 0.5), natural %.3f "
                "(need <= 1.2)",
                adv_ratio, nat_ratio);
  ctx.detail = buf;
  ctx.expect(adv_ratio <= 0.5, "adversarial ratio above 0.5");
  ctx.expect(nat_ratio <= 1.2, "natural ratio above 1.2");
}

// --- check 8: benchmark methodology -----------------------------------------

void check_bench_methodology(CheckContext& ctx, const ModelTransform&) {
  // Fixture corpus with several length buckets, run through the real CLI;
  // the reported p95 must equal the footnote percentile recomputed from the
  // emitted per-bucket lines.
  const std::string dir = "acceptance_tmp";
  std::filesystem::create_directories(dir);
  const std::string vocab_path = dir + "/vocab.txt";
  const std::string corpus_path = dir + "/corpus.txt";
  const std::string model_path = dir + "/model.bin";
  {
    std::ofstream vocab_file(vocab_path, std::ios::binary);
    const GeneratedCorpus fixture = adversarial_corpus({2, 3, 5, 9, 17}, 19, 8);
    for (const auto& line : fixture.vocab_lines) {
      vocab_file << encode_utf8(line) << "\n";
    }
    std::ofstream corpus_file(corpus_path, std::ios::binary);
    for (const auto& line : fixture.inputs) {
      corpus_file << encode_utf8(line) << "\n";
    }
  }

  std::istringstream empty_in;
  std::ostringstream out, err;
  int code = cli::run({"build", "--vocab", vocab_path, "--out", model_path},
                      empty_in, out, err);
  if (code != 0) {
    ctx.fail("cli build failed: " + err.str());
    return;
  }
  out.str("");
  code = cli::run({"bench", "--model", model_path, "--corpus", corpus_path,
                   "--engines", "linmax,naive", "--repeats", "3",
                   "--min-batch-ms", "2"},
                  empty_in, out, err);
  if (code != 0) {
    ctx.fail("cli bench failed: " + err.str());
    return;
  }

  // Parse BUCKET/RESULT lines per engine and recompute.
  std::istringstream lines(out.str());
  std::string line;
  std::map<std::string, std::vector<LengthBucket>> buckets;
  std::map<std::string, double> reported_p95;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    std::map<std::string, std::string> kv;
    std::string field;
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq != std::string::npos) {
        kv[field.substr(0, eq)] = field.substr(eq + 1);
      }
    }
    if (tag == "BUCKET") {
      buckets[kv["engine"]].push_back({std::stoull(kv["length"]),
                                       std::stoull(kv["count"]),
                                       std::stod(kv["mean_ns"])});
    } else if (tag == "RESULT") {
      reported_p95[kv["engine"]] = std::stod(kv["p95_ns"]);
    }
  }
  ctx.expect(buckets.size() == 2 && reported_p95.size() == 2,
             "missing machine-readable lines");
  for (const auto& [engine, engine_buckets] : buckets) {
    ctx.expect(engine_buckets.size() == 5, engine + ": expected 5 buckets");
    const double recomputed = length_bucketed_percentile(engine_buckets, 0.95);
    // The reported value is one of the bucket means, so recomputing from the
    // printed (3-decimal) bucket means reproduces it to printed precision.
    if (std::abs(recomputed - reported_p95[engine]) > 0.0015) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%s p95 %.3f != recomputed %.3f",
                    engine.c_str(), reported_p95[engine], recomputed);
      ctx.fail(buf);
    }
  }

  // Degenerate case: one length bucket makes p95 equal the mean exactly.
  const TokenizerModel model = TokenizerModel::build(
      make_vocab({U"a", U"##a"}));
  BenchOptions options;
  options.repeats = 2;
  options.min_batch_seconds = 0.001;
  const BenchReport degenerate = run_bench(
      model, {U"aaaa", U"aaaa", U"aaaa"}, {Engine::Linmax}, options);
  ctx.expect(degenerate.engines[0].p95_ns == degenerate.engines[0].mean_ns,
             "single-bucket p95 differs from mean");

  std::filesystem::remove_all(dir);
  if (ctx.ok) {
    ctx.detail = "cli p95 equals the recomputed length-bucketed percentile";
  }
}

// --- check 9: model round-trip ----------------------------------------------

void check_roundtrip(CheckContext& ctx, const ModelTransform&) {
  struct Sub {
    int number;
    void (*fn)(CheckContext&, const ModelTransform&);
  };
  const std::vector<Sub> subs = {{1, check_golden_failure_table},
                                 {2, check_golden_matching_tables},
                                 {3, check_exhaustive_differential},
                                 {4, check_e2e_differential}};
  for (const auto& sub : subs) {
    CheckContext inner;
    sub.fn(inner, roundtrip);
    if (!inner.ok) {
      ctx.fail("check " + std::to_string(sub.number) +
               " failed on a deserialized model: " + inner.detail);
    }
  }
  if (ctx.ok) {
    ctx.detail = "checks 1-4 pass identically on serialize/deserialize models";
  }
}

}  // namespace

int main(int argc, char** argv) {
  struct Check {
    int number;
    const char* name;
    void (*fn)(CheckContext&, const ModelTransform&);
  };
  const std::vector<Check> checks = {
      {1, "golden failure table", check_golden_failure_table},
      {2, "golden matching tables", check_golden_matching_tables},
      {3, "exhaustive differential", check_exhaustive_differential},
      {4, "end-to-end differential", check_e2e_differential},
      {5, "definitional property suite", check_definitional_properties},
      {6, "linearity", check_linearity},
      {7, "speedup direction", check_speedup_direction},
      {8, "benchmark methodology", check_bench_methodology},
      {9, "model round-trip", check_roundtrip},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    int n = 0;
    const std::string_view arg = argv[i];
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || n < 1 ||
        n > static_cast<int>(checks.size())) {
      std::fprintf(stderr, "usage: %s [check numbers 1-%zu]\n", argv[0],
                   checks.size());
      return 2;
    }
    selected.insert(n);
  }

  int failures = 0;
  for (const auto& check : checks) {
    if (!selected.empty() && !selected.contains(check.number)) {
      continue;
    }
    CheckContext ctx;
    check.fn(ctx, identity);
    std::printf("criterion %d (%s): %s%s%s\n", check.number, check.name,
                ctx.ok ? "PASS" : "FAIL", ctx.detail.empty() ? "" : " — ",
                ctx.detail.c_str());
    std::fflush(stdout);
    if (!ctx.ok) {
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
