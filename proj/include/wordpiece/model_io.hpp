#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wordpiece/matcher.hpp"

namespace wordpiece {

struct ModelIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Versioned little-endian binary model file: vocabulary, trie (parent/label
// triples), failure table (links + flat pops pool), the end-to-end
// augmentation when present, and the FST tables when present. No
// cross-version compatibility promises at v0.
void save_model(const TokenizerModel& model, std::ostream& out);
TokenizerModel load_model(std::istream& in);

void save_model_file(const TokenizerModel& model, const std::string& path);
TokenizerModel load_model_file(const std::string& path);

std::string serialize_model(const TokenizerModel& model);
TokenizerModel deserialize_model(std::string_view bytes);

}  // namespace wordpiece
