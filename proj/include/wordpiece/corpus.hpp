#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wordpiece {

struct GeneratedCorpus {
  std::vector<std::u32string> vocab_lines;
  std::vector<std::u32string> inputs;
};

// Worst-case corpus for the quadratic baseline: runs of 'a' of the given
// lengths over a vocabulary of 'a'-prefixes up to prefix_depth plus their
// suffix-indicator forms. The greedy scan re-tries long prefixes at every
// position while the failure-link engine stays linear.
GeneratedCorpus adversarial_corpus(const std::vector<std::size_t>& lengths,
                                   std::size_t words_per_length,
                                   std::size_t prefix_depth = 16);

// Short multi-piece words over {a, b} with mean length 4, resembling natural
// pre-tokenized text where the baseline is already fast.
GeneratedCorpus natural_corpus(std::size_t word_count, std::uint64_t seed);

}  // namespace wordpiece
