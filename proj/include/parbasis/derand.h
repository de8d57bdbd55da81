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


#ifndef PARBASIS_DERAND_H_
#define PARBASIS_DERAND_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parbasis/element_set.h"
#include "parbasis/instance.h"
#include "parbasis/solver.h"

namespace parbasis {

inline constexpr std::size_t kMaxUniverseElements = 16;
inline constexpr std::uint64_t kMaxUniverseGraphs = 20'000'000;

struct UniversalFamily {
  std::size_t m = 0;
  std::size_t girth = 0;
  double growth = 2.0;
  std::vector<ElementSet> sets;
  // Set only by a passing exhaustive verification.
  bool verified = false;
};

// Circuits of length in (girth, floor(growth * girth)].
std::size_t TargetMaxLength(std::size_t girth, double growth);

// One matroid of the universe: a representative graph plus its circuits as
// bit masks over the m edges.
struct UniverseMember {
  GraphicInstance graph;
  std::vector<std::uint64_t> circuits;
  std::vector<std::uint64_t> targets;
};

struct GraphUniverse {
  std::size_t m = 0;
  std::size_t max_vertices = 0;
  std::size_t girth = 0;
  double growth = 2.0;
  // Edge sequences visited, before merging equal matroids.
  std::uint64_t graphs_visited = 0;
  std::vector<UniverseMember> members;

  std::size_t TargetCount() const;
};

// Every multigraph with m labeled edges on at most `max_vertices` vertices
// whose girth is at least `girth`, up to renaming vertices. Graphs with the
// same circuits (hence the same matroid) are merged, and members without a
// target circuit are dropped. CapacityError when the enumeration is too large.
GraphUniverse BuildGraphUniverse(std::size_t m, std::size_t max_vertices,
                                 std::size_t girth, double growth);

struct Counterexample {
  GraphicInstance graph;
  Circuit circuit;
};

struct FamilyVerdict {
  bool universal = false;
  std::size_t covered = 0;
  std::size_t total = 0;
  std::optional<Counterexample> counterexample;

  double Coverage() const {
    return total == 0 ? 1.0 : static_cast<double>(covered) / total;
  }
};

// True iff every target of every member is, for some set B of the family,
// the only circuit inside B. Reports the first uncovered pair.
FamilyVerdict VerifyUniversalFamily(const UniversalFamily& family,
                                    const GraphUniverse& universe);

struct SearchOptions {
  // 0 means 2^m.
  std::size_t family_size = 0;
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 0;
  // Sets are drawn at SamplingRate(m, girth, sampling_exponent).
  double sampling_exponent = 0.5;
};

struct SearchResult {
  std::optional<UniversalFamily> family;
  std::uint64_t candidates_tried = 0;
  double best_coverage = 0.0;
};

// Draws candidate family c as sets DrawSample([m], p, seed, c, j) and returns
// the first candidate that verifies.
SearchResult SearchUniversalFamily(const GraphUniverse& universe,
                                   const SearchOptions& options);

// All subsets of [0, m) with size in (girth, floor(growth * girth)]. Every
// target isolates itself, so this family is universal for any universe.
std::vector<ElementSet> TrivialFamily(std::size_t m, std::size_t girth,
                                      double growth);

// Isolating families keyed by (live size, girth); missing keys fall back to
// TrivialFamily.
class FamilyTable : public IsolatingFamilies {
 public:
  void Add(const UniversalFamily& family);
  std::vector<ElementSet> PositionSets(std::size_t live_size,
                                       std::size_t girth,
                                       double growth) const override;

 private:
  std::map<std::pair<std::size_t, std::size_t>, UniversalFamily> families_;
};

nlohmann::json FamilyToJson(const UniversalFamily& family);
UniversalFamily FamilyFromJson(const nlohmann::json& json);
nlohmann::json VerdictToJson(const FamilyVerdict& verdict);

}  // namespace parbasis

#endif  // PARBASIS_DERAND_H_
