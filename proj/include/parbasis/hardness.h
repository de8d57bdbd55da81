// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PARBASIS_HARDNESS_H_
#define PARBASIS_HARDNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "parbasis/element_set.h"
#include "parbasis/instance.h"
#include "parbasis/query_ledger.h"
#include "parbasis/solver.h"

namespace parbasis {

struct HardInstanceParams {
  std::uint32_t L = 16;
  std::uint32_t gamma = 4;
  // 0 selects DefaultLevels(L, gamma).
  std::uint32_t levels = 0;
  // Length of the level-1 cycles. 0 selects HardBase(L).
  std::uint32_t base = 0;
  std::optional<std::size_t> pad_to;
  std::uint64_t label_seed = 0;
};

// max(1, floor(log_gamma(L) / 2)).
std::uint32_t DefaultLevels(std::uint32_t L, std::uint32_t gamma);

// round(sqrt(L)).
std::uint32_t HardBase(std::uint32_t L);

// Hidden structure of a generated hard instance: which layer and which cycle
// every element belongs to. Only the locality analyzer reads it; the solver
// API has no parameter that could take one.
class LayerMap {
 public:
  LayerMap() = default;
  LayerMap(std::uint32_t L, std::vector<std::size_t> cycle_lengths,
           std::vector<std::uint32_t> layer, std::vector<std::uint32_t> cycle);

  std::size_t size() const { return layer_.size(); }
  std::uint32_t L() const { return L_; }
  std::uint32_t levels() const {
    return static_cast<std::uint32_t>(cycle_lengths_.size());
  }
  // Layer of element e: 1..levels, or 0 for padding.
  std::uint32_t layer(ElementId e) const { return layer_[e]; }
  // Cycle index within the layer (meaningless for padding).
  std::uint32_t cycle(ElementId e) const { return cycle_[e]; }
  // Cycle length of layer i (1-based).
  std::size_t cycle_length(std::uint32_t i) const {
    return cycle_lengths_[i - 1];
  }

  nlohmann::json ToJson() const;
  static LayerMap FromJson(const nlohmann::json& json);

 private:
  std::uint32_t L_ = 0;
  std::vector<std::size_t> cycle_lengths_;
  std::vector<std::uint32_t> layer_;
  std::vector<std::uint32_t> cycle_;
};

struct HardInstance {
  GraphicInstance graph;
  LayerMap layers;
};

// Layer i in 1..levels holds L vertex-disjoint cycles of length
// base * gamma^(i - 1); padding edges are disjoint and non-adjacent. Edge
// labels are a seeded uniform permutation.
HardInstance GenHardInstance(const HardInstanceParams& params);

enum class Locality { kLocalByCycle, kLocalBySize, kNonLocal };

std::string LocalityName(Locality verdict);

struct RoundLocality {
  std::uint64_t local_by_cycle = 0;
  std::uint64_t local_by_size = 0;
  std::uint64_t non_local = 0;

  std::uint64_t total() const {
    return local_by_cycle + local_by_size + non_local;
  }
  double LocalFraction() const;
};

struct LocalityVerdict {
  double c = 0.0;
  std::vector<RoundLocality> rounds;
  // Per-query verdicts in ledger order; filled only on request.
  std::vector<std::vector<Locality>> queries;
};

// Classifies queries one at a time (for streaming through a session
// observer when the ledger is too large to keep).
class LocalityClassifier {
 public:
  LocalityClassifier(const LayerMap& layers, double c, bool keep_queries);

  // `round` is 1-based.
  Locality Classify(std::size_t round, const ElementSet& query) const;
  void Record(std::size_t round, const ElementSet& query);
  const LocalityVerdict& verdict() const { return verdict_; }

 private:
  const LayerMap& layers_;
  bool keep_queries_;
  std::vector<std::size_t> suffix_sizes_;  // |U_i| for i = 1..levels + 1
  std::vector<std::size_t> global_cycle_offset_;
  LocalityVerdict verdict_;
};

// Ledger-based classification. InputError if the ledger is summary-only or
// mentions an element outside the layer map.
LocalityVerdict ClassifyLocality(const QueryLedger& ledger,
                                 const LayerMap& layers, double c,
                                 bool keep_queries = false);
LocalityVerdict ClassifyLocality(
    const std::vector<std::vector<RecordedQuery>>& rounds,
    const LayerMap& layers, double c, bool keep_queries = false);

// c such that q = L^c, the per-round budget of the lower-bound argument.
double LocalityExponent(std::uint64_t queries_per_round, std::uint32_t L);

nlohmann::json VerdictToJson(const LocalityVerdict& verdict);

struct BenchRow {
  std::string family;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::size_t rounds = 0;
  std::uint64_t max_queries_per_round = 0;
  std::uint64_t total_queries = 0;
  bool success = false;
  // Number of layers for the hard family.
  std::optional<std::uint32_t> levels;
  std::string failure;
};

struct BenchOptions {
  std::string family = "cycle";  // cycle, complete, path, random-graph, hard
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  SolverConfig solver;
  LedgerOptions ledger{LedgerDetail::kSummary, std::nullopt};
  // Hard family: size is L.
  std::uint32_t gamma = 4;
  std::uint32_t levels = 0;
};

// Instance of the named family at the given size and seed.
MatroidInstance BenchInstance(const BenchOptions& options, std::size_t size,
                              std::uint64_t seed);

// One row per (size, seed); a failed run is a row, not an exception.
std::vector<BenchRow> BenchRounds(const BenchOptions& options);

std::string BenchToCsv(const std::vector<BenchRow>& rows);

}  // namespace parbasis

#endif  // PARBASIS_HARDNESS_H_
