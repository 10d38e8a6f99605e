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

// Euclidean nearest-neighbour retrieval over topic vectors, scored by
// average precision at fixed cutoffs.

#ifndef SEMLOC_RETRIEVAL_HPP_
#define SEMLOC_RETRIEVAL_HPP_

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace semloc {

inline constexpr int kDefaultCutoffs[] = {1, 3, 5, 10};

struct RankedItem {
  std::string doc_id;
  double distance = 0.0;
};

struct RankedRetrieval {
  std::string query_id;
  /// Non-decreasing distances; ties ordered by doc_id.
  std::vector<RankedItem> ranked;
  /// rel[k] is 1 when ranked[k] is relevant to the query.
  std::vector<int> rel;
  std::size_t cutoff = 0;
};

/// Topic vectors (rows) with ids and label sets.
struct TopicCollection {
  std::vector<std::string> ids;
  std::vector<std::set<std::string>> labels;
  Eigen::MatrixXd topics;

  std::size_t size() const { return ids.size(); }
};

/// The `n` database entries closest to `query`. An entry whose id equals
/// `query_id` is skipped. `rel` is left empty.
RankedRetrieval retrieve_top_n(const std::string& query_id,
                               const Eigen::Ref<const Eigen::VectorXd>& query,
                               const TopicCollection& database, std::size_t n);

/// sum_{k <= n} P(k) rel(k) / min(n, total_relevant); 0 when nothing is relevant.
double average_precision(const RankedRetrieval& ranking, long total_relevant);

struct QueryOutcome {
  RankedRetrieval ranking;
  long total_relevant = 0;
};

double mean_average_precision(std::span<const QueryOutcome> queries);

struct FoldResult {
  int fold = 0;
  std::size_t queries = 0;
  /// cutoff -> mAP.
  std::map<int, double> map_at;
};

struct EvalReport {
  std::vector<int> cutoffs{1, 3, 5, 10};
  std::vector<FoldResult> folds;

  /// Mean over folds per cutoff.
  std::map<int, double> mean() const;
};

/// Queries every member of `queries` against `database`; relevance is a
/// shared label.
FoldResult evaluate_retrieval(int fold, const TopicCollection& queries,
                              const TopicCollection& database, std::span<const int> cutoffs);

}  // namespace semloc

#endif  // SEMLOC_RETRIEVAL_HPP_
