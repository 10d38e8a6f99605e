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

// Word-pair generation: dependency arcs from CoNLL-U, adjacent-window pairs.

#ifndef SEMLOC_DEPENDENCY_PAIRS_HPP_
#define SEMLOC_DEPENDENCY_PAIRS_HPP_

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semloc/corpus.hpp"

namespace semloc {

struct DepArc {
  std::string doc_id;
  int sentence_index = 0;
  std::string governor;
  std::string dependent;
  std::string relation;

  bool operator==(const DepArc&) const = default;
};

/// Ordered (governor, dependent) pair.
struct WordPair {
  std::string first;
  std::string second;

  auto operator<=>(const WordPair&) const = default;

  /// "governor|dependent", the serialized term form.
  std::string key() const { return first + "|" + second; }
  static WordPair from_key(std::string_view key);
};

/// Pair multiset: pair -> occurrence count (counts are >= 1).
using PairCounts = std::map<WordPair, long>;

/// Arcs grouped per document, in file order.
using ArcTable = std::map<std::string, std::vector<DepArc>>;

enum class PairGenMethod { kBaseline, kSemantic, kNgram, kNonK };

std::string_view method_name(PairGenMethod m);
PairGenMethod parse_method(std::string_view name);

/// Reads CoNLL-U. Document boundaries come from "# newdoc id = ..." comments.
/// Root arcs, punct arcs, multiword-token ranges and empty nodes are skipped.
ArcTable parse_conllu(const std::filesystem::path& path);
ArcTable parse_conllu(std::istream& in, const std::string& source_name = "<conllu>");

/// Direct pair list: "doc_id \t governor \t dependent \t relation" per line.
ArcTable read_pair_list(std::istream& in, const std::string& source_name = "<pairs>");
ArcTable read_pair_list(const std::filesystem::path& path);
void write_pair_list(std::ostream& out, const ArcTable& arcs);

/// One pair per arc whose endpoints both normalize to non-stop tokens.
PairCounts extract_semantic_pairs(std::span<const DepArc> arcs, const StopList& stops);

/// All ordered pairs (tokens[i], tokens[j]) with 0 < j - i < window.
PairCounts extract_ngram_pairs(std::span<const std::string> tokens, int window = 2);

long total_count(const PairCounts& pairs);

}  // namespace semloc

#endif  // SEMLOC_DEPENDENCY_PAIRS_HPP_
