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

// End-to-end experiment orchestration: one pipeline run per (generation
// method, total feature size, K) cell, sweeps over those axes, and reports.

#ifndef SEMLOC_EXPERIMENT_HPP_
#define SEMLOC_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "semloc/common.hpp"
#include "semloc/corpus.hpp"
#include "semloc/dependency_pairs.hpp"
#include "semloc/embedding_cluster.hpp"
#include "semloc/feature_matrix.hpp"
#include "semloc/retrieval.hpp"
#include "semloc/rsm.hpp"

namespace semloc {

/// An error raised inside a named pipeline stage.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what);

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct ExperimentConfig {
  std::filesystem::path corpus;
  /// Dependency parses; either CoNLL-U or the direct pair-list format.
  std::filesystem::path conllu;
  std::filesystem::path pair_list;
  std::filesystem::path embeddings;
  /// Empty selects the bundled stop list.
  std::filesystem::path stoplist;
  std::filesystem::path output_dir;

  PairGenMethod method = PairGenMethod::kSemantic;
  std::vector<std::size_t> feature_sizes{10500, 11000, 11500, 12000, 12500, 15000};
  std::vector<int> k_values{100, 300, 500, 800, 1000};

  std::size_t word_cap = 10000;
  std::size_t pair_cap = 10000;
  double word_threshold = 0.01;
  double pair_lower = 0.01;
  double pair_upper_quantile = 0.9;
  int ngram_window = 2;
  int kmeans_max_iter = 100;
  double kmeans_tol = 1e-6;

  TrainConfig train;
  std::uint64_t seed = 0;
  int folds = 5;
  SplitRatios ratios;
  std::vector<int> cutoffs{1, 3, 5, 10};

  /// Throws before any compute when a referenced path is missing or a list is empty.
  void validate() const;
  nlohmann::json to_json() const;
  /// Hash of the canonical JSON rendering; output paths are excluded.
  std::string hash() const;
};

/// The bundled stop list shipped with the sources.
std::filesystem::path default_stoplist_path();

struct RunSpec {
  PairGenMethod method = PairGenMethod::kSemantic;
  std::size_t feature_size = 10500;
  int k = 100;

  /// e.g. "semantic-F10500-K100".
  std::string tag() const;
};

struct StageCount {
  std::string stage;
  std::size_t count = 0;
};

struct FoldArtifacts {
  int fold = 0;
  std::vector<StageCount> counts;
  std::size_t word_features = 0;
  std::size_t pair_features = 0;
  std::optional<double> reduction;
  /// Sum of filtered pair counts and of merged feature counts.
  long filtered_pair_mass = 0;
  long merged_pair_mass = 0;
  std::vector<EpochStats> epochs;
};

struct RunResult {
  RunSpec spec;
  std::string config_hash;
  std::uint64_t seed = 0;
  EvalReport report;
  std::vector<FoldArtifacts> folds;

  nlohmann::json to_json() const;
};

enum class SweepAxis { kFeatureSize, kK, kGenMethod };

SweepAxis parse_axis(std::string_view name);
std::string_view axis_name(SweepAxis axis);

struct SweepCell {
  std::string value;
  RunSpec spec;
  std::optional<RunResult> result;
  std::optional<RunResult> baseline;
  std::string error;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::kFeatureSize;
  std::string config_hash;
  std::vector<SweepCell> cells;

  nlohmann::json to_json() const;
  /// Direction-of-effect note: word+pair mean mAP against the word-only
  /// baseline at matched feature size. Informational only.
  nlohmann::json advisory() const;
};

/// Fold-level intermediate products of the feature stages.
struct PreparedFold {
  int fold = 0;
  FeatureSpace space;
  std::vector<DocFeatureVector> train;
  std::vector<DocFeatureVector> test;
  FoldArtifacts artifacts;
};

class Pipeline {
 public:
  explicit Pipeline(ExperimentConfig config);
  ~Pipeline();
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  const ExperimentConfig& config() const { return config_; }
  const Corpus& corpus();
  const std::vector<CorpusSplit>& splits();

  /// Ingest through featurization for one fold.
  PreparedFold prepare(const RunSpec& spec, int fold);
  /// Trains the fold model, reusing a content-addressed cached model when present.
  RsmModel train(const RunSpec& spec, const PreparedFold& prepared,
                 std::vector<EpochStats>* history = nullptr);
  FoldResult evaluate(const RsmModel& model, const PreparedFold& prepared);

  /// Every fold of one cell, artifacts persisted when an output directory is set.
  RunResult run(const RunSpec& spec);
  SweepTable sweep(SweepAxis axis);

  /// Default cell: configured method, first feature size, first K.
  RunSpec default_spec() const;

  /// On-disk layout: <output>/<tag>/fold<i>/...
  std::filesystem::path cell_dir(const RunSpec& spec) const;
  std::filesystem::path fold_dir(const RunSpec& spec, int fold) const;
  std::filesystem::path model_path(const RunSpec& spec, int fold) const;

  /// Writes the feature-stage artifacts of one fold.
  void persist(const RunSpec& spec, const PreparedFold& prepared) const;
  /// Reads back what `persist` wrote (feature space manifest and matrices).
  PreparedFold load_prepared(const RunSpec& spec, int fold) const;

  /// Wraps per-fold results into a RunResult for this pipeline's config.
  RunResult assemble(const RunSpec& spec, std::vector<FoldResult> folds,
                     std::vector<FoldArtifacts> artifacts) const;

 private:
  struct State;

  ExperimentConfig config_;
  std::unique_ptr<State> state_;
};

/// Shorthand for Pipeline(config).run(spec).
RunResult run_pipeline(const ExperimentConfig& config, std::optional<RunSpec> spec = std::nullopt);

/// CSV rows "config_hash,seed,method,feature_size,k,fold,cutoff,map".
std::string report_csv(const std::vector<RunResult>& results);
/// CSV rows "axis,value,method,feature_size,k,cutoff,map,baseline_map,status".
std::string sweep_csv(const SweepTable& table);

enum class ReportFormat { kCsv, kJson };

/// Writes report.csv / report.json into `dir`; returns the written paths.
std::vector<std::filesystem::path> emit_report(const std::vector<RunResult>& results,
                                               const std::filesystem::path& dir,
                                               const std::vector<ReportFormat>& formats);
std::vector<std::filesystem::path> emit_sweep(const SweepTable& table,
                                              const std::filesystem::path& dir,
                                              const std::vector<ReportFormat>& formats);

/// Reads a report.json written by emit_report.
std::vector<RunResult> read_report_json(const std::filesystem::path& path);

}  // namespace semloc

#endif  // SEMLOC_EXPERIMENT_HPP_
