// Copyright 2026 The semloc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Labeled document corpora: loading, tokenization and seeded splits.

#ifndef SEMLOC_CORPUS_HPP_
#define SEMLOC_CORPUS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semloc/common.hpp"

namespace semloc {

class StopList {
 public:
  StopList() = default;
  StopList(std::initializer_list<std::string_view> words);

  /// Reads one word per line; blank lines and `#` comments are ignored.
  static StopList load(const std::filesystem::path& path);
  static StopList parse(std::istream& in);

  void add(std::string_view word);
  /// `word` must already be lowercase.
  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct Document {
  std::string doc_id;
  std::string text;
  std::vector<std::string> tokens;
  std::set<std::string> labels;

  /// True when the two documents share at least one label.
  bool shares_label(const Document& other) const;
};

using Corpus = std::vector<Document>;

/// Loads a JSON-lines corpus: one {"id", "text", "labels"} object per line.
/// Tokens are left empty; see tokenize_corpus.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::istream& in, const std::string& source_name = "<corpus>");

/// Lowercase ASCII; bytes >= 0x80 pass through so UTF-8 words stay intact.
std::string to_lower(std::string_view s);

/// Splits on non-alphanumeric characters, lowercases, drops tokens shorter
/// than two bytes, pure numbers and stop words.
std::vector<std::string> tokenize(std::string_view text, const StopList& stops);

/// Normalizes a single surface form the way `tokenize` would, returning
/// nothing when the form would not survive as exactly one token.
std::optional<std::string> normalize_word(std::string_view form, const StopList& stops);

void tokenize_corpus(Corpus& corpus, const StopList& stops);

enum class Subset : std::uint8_t { kTrain = 0, kValidation = 1, kTest = 2 };

std::string_view subset_name(Subset s);

struct SplitRatios {
  std::array<int, 3> percent{70, 10, 20};
};

struct CorpusSplit {
  int fold_id = 0;
  std::uint64_t seed = 0;
  /// Parallel to the corpus: assignment[i] is the subset of corpus[i].
  std::vector<Subset> assignment;

  std::vector<std::size_t> indices(Subset s) const;
  std::size_t count(Subset s) const;
};

/// Splits `n` documents into subset sizes by largest-remainder rounding of
/// the ratios, so every size is within one document of its exact quota.
std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& ratios);

/// Produces `n_folds` independent seeded re-splits of the corpus.
std::vector<CorpusSplit> make_splits(const Corpus& corpus, std::uint64_t seed, int n_folds = 5,
                                     const SplitRatios& ratios = {});

}  // namespace semloc

#endif  // SEMLOC_CORPUS_HPP_
