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

// The combined word + merged-pair input space and document count vectors.

#ifndef SEMLOC_FEATURE_MATRIX_HPP_
#define SEMLOC_FEATURE_MATRIX_HPP_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "semloc/common.hpp"
#include "semloc/pair_coalesce.hpp"
#include "semloc/vocab_tfidf.hpp"

namespace semloc {

class InsufficientFeaturesError : public Error {
 public:
  InsufficientFeaturesError(std::size_t requested, std::size_t achievable);

  std::size_t achievable() const { return achievable_; }

 private:
  std::size_t achievable_;
};

/// Word features occupy [0, W), merged-pair features [W, W + P).
class FeatureSpace {
 public:
  FeatureSpace() = default;
  FeatureSpace(std::vector<std::string> words, std::vector<MergedPairFeature> pairs);

  std::size_t word_count() const { return words_.size(); }
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t size() const { return words_.size() + pairs_.size(); }

  const std::vector<std::string>& words() const { return words_; }
  const std::vector<MergedPairFeature>& pair_features() const { return pairs_; }

  std::optional<std::size_t> word_index(const std::string& word) const;
  /// Index of the merged feature a member pair belongs to.
  std::optional<std::size_t> pair_index(const WordPair& pair) const;

  /// One line per feature: "index \t word \t term" or
  /// "index \t pair \t gov_cluster:dep_cluster \t label \t count".
  void write_manifest(std::ostream& out) const;
  std::string manifest_hash() const;
  /// Rebuilds a space from a manifest. Each pair feature keeps only its
  /// label as a member, which is enough for training and evaluation.
  static FeatureSpace read_manifest(std::istream& in, const std::string& source_name = "<manifest>");

 private:
  std::vector<std::string> words_;
  std::vector<MergedPairFeature> pairs_;
  std::unordered_map<std::string, std::size_t> word_index_;
  std::map<WordPair, std::size_t> pair_index_;
};

/// Word block (at most `word_cap` survivors) followed by the
/// `target_total - W` highest-count merged pairs.
FeatureSpace build_feature_space(const Vocabulary& words,
                                 const std::vector<MergedPairFeature>& merged,
                                 std::size_t target_total, std::size_t word_cap = 10000);

/// Sparse non-negative count vector over a FeatureSpace.
struct DocFeatureVector {
  std::string doc_id;
  std::size_t dimension = 0;
  /// (feature index, count), sorted by index, counts > 0.
  std::vector<std::pair<std::size_t, long>> entries;

  long total() const;
  Eigen::VectorXd dense() const;
  std::size_t nonzeros() const { return entries.size(); }
};

DocFeatureVector featurize(const std::string& doc_id, std::span<const std::string> tokens,
                           const PairCounts& pairs, const FeatureSpace& space);

/// Stacks vectors as rows of a dense count matrix.
Eigen::MatrixXd to_dense(std::span<const DocFeatureVector> docs, std::size_t dimension);

/// TSV "doc_id \t feature_index \t count"; documents without any count get a
/// single "doc_id \t -1 \t 0" marker line so they survive a round trip.
void write_sparse(std::ostream& out, std::span<const DocFeatureVector> docs);
std::vector<DocFeatureVector> read_sparse(std::istream& in, std::size_t dimension,
                                          const std::string& source_name = "<sparse>");

}  // namespace semloc

#endif  // SEMLOC_FEATURE_MATRIX_HPP_
