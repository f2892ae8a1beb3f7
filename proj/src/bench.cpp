#include "wordpiece/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "wordpiece/e2e.hpp"
#include "wordpiece/oracle.hpp"

namespace wordpiece {

namespace {

using Clock = std::chrono::steady_clock;

inline void do_not_optimize(std::uint64_t value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : : "r"(value));
#else
  volatile std::uint64_t sink = value;
  (void)sink;
#endif
}

struct Bucket {
  std::size_t length;
  std::vector<const std::u32string*> inputs;
};

template <typename F>
double measure_bucket(const Bucket& bucket, const BenchOptions& options, F&& call,
                      std::uint64_t& total_calls) {
  TokenSeq out;
  std::uint64_t sink = 0;
  for (int i = 0; i < options.warmup_passes; ++i) {
    for (const auto* input : bucket.inputs) {
      call(*input, out);
      sink += out.size();
    }
  }
  std::uint64_t calls = 0;
  const auto start = Clock::now();
  double elapsed = 0.0;
  do {
    for (const auto* input : bucket.inputs) {
      call(*input, out);
      sink += out.size();
    }
    calls += bucket.inputs.size();
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  } while (elapsed < options.min_batch_seconds);
  do_not_optimize(sink);
  total_calls += calls;
  return elapsed * 1e9 / static_cast<double>(calls);
}

template <typename F>
EngineReport run_engine(Engine engine, const std::vector<Bucket>& buckets,
                        const BenchOptions& options, F&& call) {
  EngineReport report;
  report.engine = engine;
  report.buckets.reserve(buckets.size());
  std::vector<double> sums(buckets.size(), 0.0);
  for (int rep = 0; rep < options.repeats; ++rep) {
    for (std::size_t b = 0; b < buckets.size(); ++b) {
      sums[b] += measure_bucket(buckets[b], options, call, report.total_calls);
    }
  }
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    report.buckets.push_back(
        {buckets[b].length, buckets[b].inputs.size(),
         sums[b] / static_cast<double>(options.repeats)});
  }
  report.mean_ns = bucket_weighted_mean(report.buckets);
  report.p95_ns = length_bucketed_percentile(report.buckets, 0.95);
  return report;
}

}  // namespace

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::Linmax: return "linmax";
    case Engine::Fst: return "fst";
    case Engine::Naive: return "naive";
    case Engine::E2E: return "e2e";
    case Engine::E2ENaive: return "e2e-naive";
  }
  return "?";
}

std::optional<Engine> engine_from_name(std::string_view name) {
  if (name == "linmax") return Engine::Linmax;
  if (name == "fst") return Engine::Fst;
  if (name == "naive") return Engine::Naive;
  if (name == "e2e") return Engine::E2E;
  if (name == "e2e-naive") return Engine::E2ENaive;
  return std::nullopt;
}

bool engine_is_text(Engine engine) {
  return engine == Engine::E2E || engine == Engine::E2ENaive;
}

double bucket_weighted_mean(const std::vector<LengthBucket>& buckets) {
  if (buckets.size() == 1) {
    // keeps the one-bucket case exactly equal to the bucket mean (and the
    // 95th percentile)
    return buckets[0].mean_ns;
  }
  double total = 0.0;
  std::size_t n = 0;
  for (const auto& b : buckets) {
    total += b.mean_ns * static_cast<double>(b.count);
    n += b.count;
  }
  return n == 0 ? 0.0 : total / static_cast<double>(n);
}

double length_bucketed_percentile(const std::vector<LengthBucket>& buckets,
                                  double pct) {
  std::size_t n = 0;
  for (const auto& b : buckets) {
    n += b.count;
  }
  if (n == 0) {
    return 0.0;
  }
  std::vector<std::pair<double, std::size_t>> by_time;
  by_time.reserve(buckets.size());
  for (const auto& b : buckets) {
    by_time.push_back({b.mean_ns, b.count});
  }
  std::sort(by_time.begin(), by_time.end());
  const std::size_t rank = static_cast<std::size_t>(
      std::max<double>(1.0, std::ceil(pct * static_cast<double>(n))));
  std::size_t seen = 0;
  for (const auto& [time, count] : by_time) {
    seen += count;
    if (seen >= rank) {
      return time;
    }
  }
  return by_time.back().first;
}

BenchReport run_bench(const TokenizerModel& model,
                      const std::vector<std::u32string>& corpus,
                      const std::vector<Engine>& engines,
                      const BenchOptions& options) {
  if (corpus.empty()) {
    throw BenchError("benchmark corpus is empty");
  }
  std::map<std::size_t, Bucket> by_length;
  std::size_t total_length = 0;
  for (const auto& input : corpus) {
    auto& bucket = by_length[input.size()];
    bucket.length = input.size();
    bucket.inputs.push_back(&input);
    total_length += input.size();
  }
  std::vector<Bucket> buckets;
  buckets.reserve(by_length.size());
  for (auto& [length, bucket] : by_length) {
    buckets.push_back(std::move(bucket));
  }

  BenchReport report;
  report.input_count = corpus.size();
  report.mean_input_length =
      static_cast<double>(total_length) / static_cast<double>(corpus.size());

  for (Engine engine : engines) {
    switch (engine) {
      case Engine::Linmax:
        report.engines.push_back(run_engine(
            engine, buckets, options, [&](const std::u32string& in, TokenSeq& out) {
              tokenize_word_into(model, in, out);
            }));
        break;
      case Engine::Fst:
        if (model.fst() == nullptr) {
          throw BenchError("model has no FST tables; rebuild with fst enabled");
        }
        report.engines.push_back(run_engine(
            engine, buckets, options, [&](const std::u32string& in, TokenSeq& out) {
              tokenize_word_fst_into(model, in, out);
            }));
        break;
      case Engine::Naive:
        report.engines.push_back(run_engine(
            engine, buckets, options, [&](const std::u32string& in, TokenSeq& out) {
              oracle::original_wordpiece_word_into(model.vocab(), in, out);
            }));
        break;
      case Engine::E2E:
        if (!model.is_e2e()) {
          throw BenchError("model was not built for end-to-end mode");
        }
        report.engines.push_back(run_engine(
            engine, buckets, options, [&](const std::u32string& in, TokenSeq& out) {
              tokenize_text_into(model, in, out);
            }));
        break;
      case Engine::E2ENaive:
        report.engines.push_back(run_engine(
            engine, buckets, options, [&](const std::u32string& in, TokenSeq& out) {
              oracle::e2e_reference_into(model.vocab(), in, out);
            }));
        break;
    }
  }
  return report;
}

}  // namespace wordpiece
