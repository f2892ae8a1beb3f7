#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wordpiece/matcher.hpp"

namespace wordpiece {

struct BenchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Engine { Linmax, Fst, Naive, E2E, E2ENaive };

std::string_view engine_name(Engine engine);
std::optional<Engine> engine_from_name(std::string_view name);

// Text engines consume one sentence per corpus line; the others one word.
bool engine_is_text(Engine engine);

struct BenchOptions {
  int repeats = 10;
  // Each measurement batches calls until it ran at least this long, so
  // per-call times far below clock resolution stay meaningful.
  double min_batch_seconds = 0.010;
  int warmup_passes = 1;
};

struct LengthBucket {
  std::size_t length = 0;
  std::size_t count = 0;
  double mean_ns = 0.0;  // per-call, averaged across repeats
};

struct EngineReport {
  Engine engine = Engine::Linmax;
  double mean_ns = 0.0;
  double p95_ns = 0.0;
  std::uint64_t total_calls = 0;
  std::vector<LengthBucket> buckets;  // sorted by length
};

struct BenchReport {
  std::size_t input_count = 0;
  double mean_input_length = 0.0;
  std::vector<EngineReport> engines;
};

// Mean per-call time over inputs, with every input of a length weighted by
// its bucket mean.
double bucket_weighted_mean(const std::vector<LengthBucket>& buckets);

// Percentile where each input's time is approximated by the mean time of all
// inputs of the same length; nearest-rank (1-indexed rank ceil(pct * N)).
double length_bucketed_percentile(const std::vector<LengthBucket>& buckets,
                                  double pct);

// Times every engine over the corpus, bucketing inputs by code point length.
// Throws BenchError for an empty corpus or an engine the model cannot run.
BenchReport run_bench(const TokenizerModel& model,
                      const std::vector<std::u32string>& corpus,
                      const std::vector<Engine>& engines,
                      const BenchOptions& options = {});

}  // namespace wordpiece
