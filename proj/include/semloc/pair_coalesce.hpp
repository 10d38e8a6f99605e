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

// Merging word pairs whose words fall in the same embedding clusters.

#ifndef SEMLOC_PAIR_COALESCE_HPP_
#define SEMLOC_PAIR_COALESCE_HPP_

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semloc/dependency_pairs.hpp"
#include "semloc/embedding_cluster.hpp"
#include "semloc/vocab_tfidf.hpp"

namespace semloc {

/// Ordered (governor cluster, dependent cluster); ids in [0, k].
struct ClusterPairKey {
  ClusterId gov = 0;
  ClusterId dep = 0;

  auto operator<=>(const ClusterPairKey&) const = default;
};

struct MergedPairFeature {
  ClusterPairKey key;
  /// Member pairs with their corpus counts, highest count first.
  std::vector<std::pair<WordPair, long>> members;
  long count = 0;
  /// Highest-count member.
  WordPair label;
};

/// Partitions `pairs` by (assign(gov), assign(dep)) and sums counts. Output
/// is sorted by count descending, then key.
std::vector<MergedPairFeature> coalesce_pairs(const PairCounts& pairs, const ClusterModel& model);

/// Same, taking pair terms and frequencies from a pair vocabulary.
std::vector<MergedPairFeature> coalesce_pairs(const Vocabulary& pairs, const ClusterModel& model);

ClusterPairKey key_of(const WordPair& pair, const ClusterModel& model);

/// A model giving every word its own cluster, so coalescing is the identity
/// partition. Ids follow the sorted word order.
ClusterModel identity_cluster_model(const std::set<std::string>& words);

/// 1 - after / before.
double reduction_ratio(long n_before, long n_after);

/// TSV: "key_gov \t key_dep \t count \t label_gov|label_dep \t member_count".
void write_merged_features(std::ostream& out, const std::vector<MergedPairFeature>& features);

}  // namespace semloc

#endif  // SEMLOC_PAIR_COALESCE_HPP_
