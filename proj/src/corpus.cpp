#include "wordpiece/corpus.hpp"

#include <random>

namespace wordpiece {

GeneratedCorpus adversarial_corpus(const std::vector<std::size_t>& lengths,
                                   std::size_t words_per_length,
                                   std::size_t prefix_depth) {
  GeneratedCorpus corpus;
  for (std::size_t k = 1; k <= prefix_depth; ++k) {
    corpus.vocab_lines.push_back(std::u32string(k, U'a'));
  }
  for (std::size_t k = 1; k <= prefix_depth; ++k) {
    corpus.vocab_lines.push_back(U"##" + std::u32string(k, U'a'));
  }
  for (std::size_t n : lengths) {
    for (std::size_t i = 0; i < words_per_length; ++i) {
      corpus.inputs.push_back(std::u32string(n, U'a'));
    }
  }
  return corpus;
}

GeneratedCorpus natural_corpus(std::size_t word_count, std::uint64_t seed) {
  GeneratedCorpus corpus;
  corpus.vocab_lines = {U"a",    U"b",    U"aa",   U"ab",   U"ba",   U"bb",
                        U"aab",  U"abb",  U"bab",  U"bba",  U"##a",  U"##b",
                        U"##aa", U"##ab", U"##ba", U"##bb"};
  std::mt19937_64 rng(seed);
  // Mean word length 4 over lengths 2..6.
  std::discrete_distribution<int> length_dist({0.15, 0.20, 0.30, 0.20, 0.15});
  std::bernoulli_distribution letter(0.5);
  for (std::size_t i = 0; i < word_count; ++i) {
    const int len = 2 + length_dist(rng);
    std::u32string word;
    word.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) {
      word.push_back(letter(rng) ? U'a' : U'b');
    }
    corpus.inputs.push_back(std::move(word));
  }
  return corpus;
}

}  // namespace wordpiece
