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

// Pretrained word vectors and Euclidean k-means over them.

#ifndef SEMLOC_EMBEDDING_CLUSTER_HPP_
#define SEMLOC_EMBEDDING_CLUSTER_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace semloc {

/// Word vectors restricted to the words a run needs. Row i of `vectors()`
/// belongs to `words()[i]`; words are kept in sorted order.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(int dimension, std::vector<std::string> words, Eigen::MatrixXd vectors);

  int dimension() const { return dimension_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<std::string>& words() const { return words_; }
  const Eigen::MatrixXd& vectors() const { return vectors_; }
  std::optional<std::size_t> row_of(std::string_view word) const;

 private:
  int dimension_ = 0;
  std::vector<std::string> words_;
  Eigen::MatrixXd vectors_;
  std::unordered_map<std::string, std::size_t> rows_;
};

/// Reads "word v1 ... vd" lines; a leading "count dim" header is skipped.
/// Only words in `needed` are retained.
EmbeddingTable load_embeddings(const std::filesystem::path& path,
                               const std::set<std::string>& needed);
EmbeddingTable parse_embeddings(std::istream& in, const std::set<std::string>& needed,
                                const std::string& source_name = "<embeddings>");

using ClusterId = int;

struct ClusterModel {
  int k = 0;
  /// k x d.
  Eigen::MatrixXd centroids;
  std::unordered_map<std::string, ClusterId> assignment;
  /// Sum of squared distances after every assignment step of the fit.
  std::vector<double> objective_history;
  int iterations = 0;

  /// Sentinel id for words without an embedding.
  ClusterId unknown_id() const { return k; }
};

struct KMeansOptions {
  int k = 100;
  std::uint64_t seed = 0;
  int max_iter = 100;
  double tol = 1e-6;
};

/// k-means++ seeding followed by Lloyd iterations until the largest
/// centroid shift drops below `tol` or `max_iter` is reached.
ClusterModel kmeans_fit(const EmbeddingTable& table, const KMeansOptions& options);

/// Nearest centroid; ties go to the lowest index.
ClusterId nearest_centroid(const ClusterModel& model, const Eigen::Ref<const Eigen::VectorXd>& v);

/// Cluster of a fitted word, or `unknown_id()` for words the model never saw.
ClusterId assign_cluster(const ClusterModel& model, std::string_view word);

/// Sum of squared distances of every row of `points` to its assigned centroid.
double kmeans_objective(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centroids,
                        const std::vector<ClusterId>& labels);

}  // namespace semloc

#endif  // SEMLOC_EMBEDDING_CLUSTER_HPP_
