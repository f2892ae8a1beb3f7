#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wordpiece/bench.hpp"
#include "wordpiece/corpus.hpp"
#include "wordpiece/e2e.hpp"
#include "wordpiece/model_io.hpp"
#include "wordpiece/oracle.hpp"
#include "wordpiece/utf8.hpp"

namespace wordpiece::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

char32_t single_char(const std::string& arg, const std::string& flag) {
  const std::u32string decoded = decode_utf8(arg);
  if (decoded.size() != 1) {
    throw std::runtime_error(flag + " must be exactly one character");
  }
  return decoded[0];
}

std::vector<std::u32string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::vector<std::u32string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      lines.push_back(decode_utf8(line));
    }
  }
  return lines;
}

struct BuildArgs {
  std::string vocab_path;
  std::string out_path;
  std::string suffix = "##";
  std::string unk = "[UNK]";
  std::string boundary = " ";
  std::uint64_t max_word_length = 0;
  bool has_cap = false;
  bool e2e = false;
  bool fst = false;
};

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  VocabConfig config;
  config.suffix_indicator = decode_utf8(args.suffix);
  config.unk_token = decode_utf8(args.unk);
  config.boundary_char = single_char(args.boundary, "--boundary");
  if (args.has_cap) {
    config.max_word_length = static_cast<std::size_t>(args.max_word_length);
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> diagnostics;
  Vocabulary vocab = Vocabulary::load(read_file(args.vocab_path), config, &diagnostics);
  for (const auto& d : diagnostics) {
    err << "warning: " << d << "\n";
  }
  BuildOptions options;
  options.e2e = args.e2e;
  options.fst = args.fst;
  TokenizerModel model = TokenizerModel::build(std::move(vocab), options);
  save_model_file(model, args.out_path);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  out << "tokens: " << model.vocab().size() << "\n";
  out << "trie nodes: " << model.trie().size() << "\n";
  out << "failure pops total: " << model.failure().pool_size() << "\n";
  if (model.fst() != nullptr) {
    out << "fst states: " << model.fst()->state_count() << " alphabet: "
        << model.fst()->alphabet().size() << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", ms);
  out << "build ms: " << buf << "\n";
  out << "model: " << args.out_path << "\n";
  return 0;
}

struct TokenizeArgs {
  std::string model_path;
  std::string mode = "word";
  std::string engine;
  std::string emit = "ids";
};

int cmd_tokenize(const TokenizeArgs& args, std::istream& in, std::ostream& out) {
  const TokenizerModel model = load_model_file(args.model_path);
  std::string engine_name_str = args.engine;
  if (engine_name_str.empty()) {
    engine_name_str = args.mode == "text" ? "e2e" : "linmax";
  }
  const auto engine = engine_from_name(engine_name_str);
  if (!engine) {
    throw std::runtime_error("unknown engine: " + engine_name_str);
  }
  if (args.mode == "text" && !engine_is_text(*engine)) {
    throw std::runtime_error("mode=text requires engine e2e or e2e-naive");
  }
  if (args.mode == "word" && engine_is_text(*engine)) {
    throw std::runtime_error("engine " + engine_name_str + " requires mode=text");
  }
  if (*engine == Engine::Fst && model.fst() == nullptr) {
    throw std::runtime_error("model has no FST tables; rebuild with --fst");
  }
  if (engine_is_text(*engine) && !model.is_e2e()) {
    throw std::runtime_error("model was not built with --e2e");
  }
  const bool emit_tokens = args.emit == "tokens";

  std::string line;
  TokenSeq ids;
  std::string out_line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::u32string input = decode_utf8(line);
    switch (*engine) {
      case Engine::Linmax: tokenize_word_into(model, input, ids); break;
      case Engine::Fst: tokenize_word_fst_into(model, input, ids); break;
      case Engine::Naive: oracle::original_wordpiece_word_into(model.vocab(), input, ids); break;
      case Engine::E2E: tokenize_text_into(model, input, ids); break;
      case Engine::E2ENaive: oracle::e2e_reference_into(model.vocab(), input, ids); break;
    }
    out_line.clear();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) {
        out_line.push_back(' ');
      }
      if (emit_tokens) {
        out_line += encode_utf8(model.vocab().token(ids[i]));
      } else {
        out_line += std::to_string(ids[i]);
      }
    }
    out << out_line << "\n";
  }
  return 0;
}

struct BenchArgs {
  std::string model_path;
  std::string corpus_path;
  std::string engines = "linmax,naive";
  int repeats = 10;
  double min_batch_ms = 10.0;
  int warmup = 1;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  const TokenizerModel model = load_model_file(args.model_path);
  const std::vector<std::u32string> corpus = read_lines(args.corpus_path);

  std::vector<Engine> engines;
  std::stringstream names(args.engines);
  std::string name;
  while (std::getline(names, name, ',')) {
    const auto engine = engine_from_name(name);
    if (!engine) {
      throw std::runtime_error("unknown engine: " + name);
    }
    engines.push_back(*engine);
  }
  if (engines.empty()) {
    throw std::runtime_error("no engines selected");
  }

  BenchOptions options;
  options.repeats = args.repeats;
  options.min_batch_seconds = args.min_batch_ms / 1000.0;
  options.warmup_passes = args.warmup;
  const BenchReport report = run_bench(model, corpus, engines, options);

  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.2f", report.mean_input_length);
  out << "corpus: " << report.input_count << " inputs, mean length " << buf
      << ", repeats " << options.repeats << "\n";
  std::snprintf(buf, sizeof(buf), "%-10s %14s %14s %12s", "engine", "mean_ns",
                "p95_ns", "calls");
  out << buf << "\n";
  for (const auto& engine : report.engines) {
    std::snprintf(buf, sizeof(buf), "%-10s %14.3f %14.3f %12llu",
                  std::string(engine_name(engine.engine)).c_str(), engine.mean_ns,
                  engine.p95_ns,
                  static_cast<unsigned long long>(engine.total_calls));
    out << buf << "\n";
  }
  for (const auto& engine : report.engines) {
    for (const auto& bucket : engine.buckets) {
      std::snprintf(buf, sizeof(buf), "BUCKET engine=%s length=%zu count=%zu mean_ns=%.3f",
                    std::string(engine_name(engine.engine)).c_str(), bucket.length,
                    bucket.count, bucket.mean_ns);
      out << buf << "\n";
    }
    std::snprintf(buf, sizeof(buf),
                  "RESULT engine=%s inputs=%zu mean_ns=%.3f p95_ns=%.3f",
                  std::string(engine_name(engine.engine)).c_str(), report.input_count,
                  engine.mean_ns, engine.p95_ns);
    out << buf << "\n";
  }
  return 0;
}

struct GenArgs {
  std::string kind = "adversarial";
  std::string out_corpus;
  std::string out_vocab;
  std::string lengths = "64,128,256,512";
  std::size_t count = 32;
  std::size_t prefix_depth = 16;
  std::uint64_t seed = 42;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  GeneratedCorpus corpus;
  if (args.kind == "adversarial") {
    std::vector<std::size_t> lengths;
    std::stringstream parts(args.lengths);
    std::string part;
    while (std::getline(parts, part, ',')) {
      lengths.push_back(static_cast<std::size_t>(std::stoull(part)));
    }
    corpus = adversarial_corpus(lengths, args.count, args.prefix_depth);
  } else if (args.kind == "natural") {
    corpus = natural_corpus(args.count, args.seed);
  } else {
    throw std::runtime_error("unknown corpus kind: " + args.kind);
  }

  const auto write_lines = [](const std::string& path,
                              const std::vector<std::u32string>& lines) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open " + path + " for writing");
    }
    for (const auto& line : lines) {
      file << encode_utf8(line) << "\n";
    }
  };
  write_lines(args.out_vocab, corpus.vocab_lines);
  write_lines(args.out_corpus, corpus.inputs);
  out << "vocab: " << args.out_vocab << " (" << corpus.vocab_lines.size()
      << " tokens)\n";
  out << "corpus: " << args.out_corpus << " (" << corpus.inputs.size()
      << " inputs)\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"WordPiece tokenizer: build models, tokenize, benchmark"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "build a model from a vocabulary file");
  build->add_option("--vocab", build_args.vocab_path, "vocabulary file, one token per line")
      ->required();
  build->add_option("--out", build_args.out_path, "model output path")->required();
  build->add_option("--suffix", build_args.suffix, "suffix indicator (default ##)");
  build->add_option("--unk", build_args.unk, "unknown token (default [UNK])");
  build->add_option("--boundary", build_args.boundary, "boundary character (default space)");
  auto* cap = build->add_option("--max-word-length", build_args.max_word_length,
                                "words longer than this become unk");
  build->add_flag("--e2e", build_args.e2e, "augment for end-to-end text mode");
  build->add_flag("--fst", build_args.fst, "also compile failure-free transition tables");

  TokenizeArgs tok_args;
  auto* tokenize = app.add_subcommand("tokenize", "tokenize stdin lines to token ids");
  tokenize->add_option("--model", tok_args.model_path, "model file")->required();
  tokenize->add_option("--mode", tok_args.mode, "word or text")
      ->check(CLI::IsMember({"word", "text"}));
  tokenize->add_option("--engine", tok_args.engine,
                       "linmax|fst|naive (word) or e2e|e2e-naive (text)");
  tokenize->add_option("--emit", tok_args.emit, "ids (default) or tokens")
      ->check(CLI::IsMember({"ids", "tokens"}));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "benchmark engines over a corpus");
  bench->add_option("--model", bench_args.model_path, "model file")->required();
  bench->add_option("--corpus", bench_args.corpus_path, "one input per line")->required();
  bench->add_option("--engines", bench_args.engines, "comma-separated engine list");
  bench->add_option("--repeats", bench_args.repeats, "experiment repetitions (default 10)");
  bench->add_option("--min-batch-ms", bench_args.min_batch_ms,
                    "minimum time per measurement batch");
  bench->add_option("--warmup", bench_args.warmup, "warmup passes per bucket");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate synthetic benchmark corpora");
  gen->add_option("--kind", gen_args.kind, "adversarial or natural");
  gen->add_option("--out-corpus", gen_args.out_corpus, "corpus output path")->required();
  gen->add_option("--out-vocab", gen_args.out_vocab, "vocabulary output path")->required();
  gen->add_option("--lengths", gen_args.lengths, "adversarial word lengths");
  gen->add_option("--count", gen_args.count, "words per length (adversarial) or total (natural)");
  gen->add_option("--prefix-depth", gen_args.prefix_depth, "adversarial vocab prefix depth");
  gen->add_option("--seed", gen_args.seed, "random seed (natural)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (build->parsed()) {
      build_args.has_cap = cap->count() > 0;
      return cmd_build(build_args, out, err);
    }
    if (tokenize->parsed()) {
      return cmd_tokenize(tok_args, in, out);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_args, out);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_args, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace wordpiece::cli
