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

// Replicated-softmax RBM topic model.
//
// Visible units are a multinomial over F features observed D times (the
// document length); hidden units are H binary topics. With shared weights W
// (F x H), visible bias a and hidden bias b, the energy of a count vector v
// with hidden state h is
//
//   E(v, h) = -sum_i v_i a_i - sum_j h_j (sum_i v_i W_ij + D b_j)
//
// so p(h_j = 1 | v) = sigmoid(sum_i v_i W_ij + D b_j), and each of the D
// visible draws given h follows softmax(a + W h).

#ifndef SEMLOC_RSM_HPP_
#define SEMLOC_RSM_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "semloc/common.hpp"
#include "semloc/feature_matrix.hpp"

namespace semloc {

struct TrainConfig {
  double learning_rate = 0.01;
  double momentum = 0.9;
  int epochs = 15;
  double weight_decay = 0.0002;
  int batch_size = 100;
  int cd_steps = 1;
  int hidden_units = 500;
  double init_stddev = 0.01;
  std::uint64_t seed = 0;

  void validate() const;
};

struct RsmModel {
  /// F x H.
  Eigen::MatrixXd weights;
  Eigen::VectorXd visible_bias;
  Eigen::VectorXd hidden_bias;
  /// Hash of the feature-space manifest the model was trained on.
  std::string manifest_hash;
  TrainConfig config;

  Eigen::Index num_visible() const { return weights.rows(); }
  Eigen::Index num_hidden() const { return weights.cols(); }
};

/// Gaussian(0, stddev^2) weights drawn row-major from `seed`; zero biases.
RsmModel init_model(std::size_t num_visible, int num_hidden, std::uint64_t seed,
                    double stddev = 0.01);

/// p(h_j = 1 | v) with the hidden bias scaled by D = sum(v).
Eigen::VectorXd hidden_probs(const RsmModel& model, const Eigen::Ref<const Eigen::VectorXd>& v);

/// Row-wise hidden_probs for a batch of count vectors (rows of `v`).
Eigen::MatrixXd hidden_probs_batch(const RsmModel& model, const Eigen::Ref<const Eigen::MatrixXd>& v);

/// softmax(a + W h), the distribution of one visible draw.
Eigen::VectorXd visible_softmax(const RsmModel& model, const Eigen::Ref<const Eigen::VectorXd>& h);

/// Draws `length` words from visible_softmax(h) and returns their counts.
Eigen::VectorXd sample_visible(const RsmModel& model, const Eigen::Ref<const Eigen::VectorXd>& h,
                               long length, Rng& rng);

/// F(v) = -sum_i v_i a_i - sum_j log(1 + exp(sum_i v_i W_ij + D b_j)).
double free_energy(const RsmModel& model, const Eigen::Ref<const Eigen::VectorXd>& v);

/// Sufficient statistics, or gradients when taken as a positive-minus-negative difference.
struct RsmStatistics {
  Eigen::MatrixXd weights;
  Eigen::VectorXd visible;
  Eigen::VectorXd hidden;
};

/// Data-dependent statistics summed over the rows of `v`: V^T P, sum V, sum D P.
/// Each is the derivative of -free_energy summed over the batch.
RsmStatistics positive_statistics(const RsmModel& model, const Eigen::Ref<const Eigen::MatrixXd>& v);

/// CD-k estimate of the mean log-likelihood gradient over the batch rows.
RsmStatistics cd_gradient(const RsmModel& model, const Eigen::Ref<const Eigen::MatrixXd>& v,
                          int cd_steps, Rng& rng);

/// Mean per-word cross-entropy of each document under its mean-field
/// reconstruction softmax(a + W p(h|v)). Empty documents are skipped.
double reconstruction_cross_entropy(const RsmModel& model, const Eigen::Ref<const Eigen::MatrixXd>& v);

struct EpochStats {
  int epoch = 0;
  double reconstruction_ce = 0.0;
  double weight_norm = 0.0;
};

using EpochCallback = std::function<void(const EpochStats&)>;

/// Mini-batch CD training starting from `model`. Batches are reshuffled each
/// epoch from the config seed.
RsmModel cd_train(RsmModel model, std::span<const DocFeatureVector> train,
                  const TrainConfig& config, std::vector<EpochStats>* history = nullptr,
                  const EpochCallback& on_epoch = {});

/// Initializes from the config seed and trains on `train`.
RsmModel cd_train(const FeatureSpace& space, std::span<const DocFeatureVector> train,
                  const TrainConfig& config, std::vector<EpochStats>* history = nullptr,
                  const EpochCallback& on_epoch = {});

using TopicVector = Eigen::VectorXd;

/// Mean-field topic activations for one document.
TopicVector infer_topics(const RsmModel& model, const DocFeatureVector& doc);

/// Versioned little-endian binary dump.
void save_model(const RsmModel& model, std::ostream& out);
RsmModel load_model(std::istream& in);
void save_model(const RsmModel& model, const std::filesystem::path& path);
RsmModel load_model(const std::filesystem::path& path);

}  // namespace semloc

#endif  // SEMLOC_RSM_HPP_
