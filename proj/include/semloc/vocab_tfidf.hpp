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

// Frequency-ranked vocabularies and the two-step TF-IDF filter.

#ifndef SEMLOC_VOCAB_TFIDF_HPP_
#define SEMLOC_VOCAB_TFIDF_HPP_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semloc/common.hpp"
#include "semloc/corpus.hpp"
#include "semloc/dependency_pairs.hpp"

namespace semloc {

/// Term -> count within one document. Pair terms use the "gov|dep" key.
using TermCounts = std::map<std::string, long>;

TermCounts count_words(std::span<const std::string> tokens);
TermCounts count_pairs(const PairCounts& pairs);

enum class VocabKind { kWord, kPair, kMergedPair };

struct VocabEntry {
  std::string term;
  long frequency = 0;
  double score = 0.0;
};

class EmptyVocabularyError : public Error {
 public:
  using Error::Error;
};

class UndefinedTermError : public Error {
 public:
  using Error::Error;
};

/// Ranked term table. Entries are ordered by frequency descending with
/// lexicographic ties.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(VocabKind kind, std::vector<VocabEntry> entries);

  VocabKind kind() const { return kind_; }
  const std::vector<VocabEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(std::string_view term) const;
  std::optional<std::size_t> index_of(std::string_view term) const;
  const VocabEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// TSV: "rank \t term \t frequency \t score", rank starting at 1.
  void write_tsv(std::ostream& out) const;
  static Vocabulary read_tsv(std::istream& in, VocabKind kind,
                             const std::string& source_name = "<vocab>");

 private:
  VocabKind kind_ = VocabKind::kWord;
  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Keeps the `cap` most frequent terms over all documents. Word terms that
/// are stop words, and pair terms with a stopped endpoint, never enter.
Vocabulary build_vocabulary(std::span<const TermCounts> docs, VocabKind kind, std::size_t cap,
                            const StopList& stops);

struct TfIdf {
  double tf = 0.0;
  double idf = 0.0;
  double tfidf = 0.0;
};

/// Per-term document statistics over one term universe (words or pairs).
///
/// tf(t, d) = count(t, d) / |d|, idf(t) = ln(N / df(t)), and the per-term
/// aggregate score is the mean of tf*idf over the documents containing t.
class TfIdfTable {
 public:
  explicit TfIdfTable(std::span<const TermCounts> docs);

  std::size_t num_docs() const { return lengths_.size(); }
  long doc_length(std::size_t doc) const;
  long doc_frequency(std::string_view term) const;

  double tf(std::string_view term, std::size_t doc) const;
  double idf(std::string_view term) const;
  TfIdf score(std::string_view term, std::size_t doc) const;
  /// Mean tf-idf over containing documents; throws for unseen terms.
  double aggregate(std::string_view term) const;

 private:
  // Postings sorted by document index.
  struct TermInfo {
    std::vector<std::pair<std::size_t, long>> postings;
  };

  const TermInfo& info(std::string_view term) const;

  std::vector<long> lengths_;
  std::unordered_map<std::string, TermInfo> terms_;
};

TfIdf tfidf_score(std::string_view term, std::size_t doc, const TfIdfTable& table);

struct WordGateResult {
  Vocabulary words;
  Vocabulary pairs;
};

/// Keeps words whose aggregate score exceeds `threshold` and pairs whose two
/// words both survived.
WordGateResult filter_word_level(const Vocabulary& word_vocab, const Vocabulary& pair_vocab,
                                 const TfIdfTable& word_table, double threshold = 0.01);

/// Band-pass on pair aggregate scores. Pairs scoring at or below `lower`
/// are dropped as too common; of the rest, sorted by (score, term), only the
/// lowest floor(upper_quantile * n) ranks are kept. `upper_quantile` = 1
/// disables the upper cut.
Vocabulary filter_pair_level(const Vocabulary& gated_pairs, const TfIdfTable& pair_table,
                             double lower = 0.01, double upper_quantile = 0.9);

}  // namespace semloc

#endif  // SEMLOC_VOCAB_TFIDF_HPP_
