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

#ifndef PARBASIS_INSTANCE_H_
#define PARBASIS_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "parbasis/element_set.h"
#include "parbasis/gf2.h"

namespace parbasis {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Multigraph whose i-th edge is element i. Self-loops and parallel edges are
// allowed.
struct GraphicInstance {
  std::uint32_t num_vertices = 0;
  std::vector<Edge> edges;

  // Throws InputError on a vertex id >= num_vertices.
  void Validate() const;
};

// Column i is the GF(2) vector of element i; all columns have `dimension`
// coordinates.
struct BinaryInstance {
  std::size_t dimension = 0;
  std::vector<Gf2Vector> columns;

  void Validate() const;
};

// Dual of the graphic matroid of `graph`: S is independent iff E \ S still
// spans every component of the graph.
struct CographicInstance {
  GraphicInstance graph;
};

// Answers for one leave-one-out block: `whole` is Ind(base) and `without[k]`
// is Ind(base \ {base[k]}).
struct BlockAnswers {
  bool whole = false;
  std::vector<std::uint8_t> without;
};

// The only view of an instance that algorithms get.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  // Number of ground-set elements.
  virtual std::size_t size() const = 0;
  // Ind(S). Throws InputError on an id outside [0, size()).
  virtual bool IsIndependent(const ElementSet& s) const = 0;
  // Fills Ind(base) and every Ind(base \ {e}). The default issues the
  // |base| + 1 evaluations one by one; realizations may answer the same family
  // faster, with identical results.
  virtual void LeaveOneOut(const ElementSet& base, BlockAnswers& out) const;
};

enum class MatroidKind { kGraphic, kBinary, kCographic };

std::string KindName(MatroidKind kind);

// A hidden ground set with one concrete realization.
class MatroidInstance final : public IndependenceOracle {
 public:
  explicit MatroidInstance(GraphicInstance graphic);
  explicit MatroidInstance(BinaryInstance binary);
  explicit MatroidInstance(CographicInstance cographic);

  MatroidKind kind() const;
  std::size_t size() const override { return size_; }
  bool IsIndependent(const ElementSet& s) const override;
  void LeaveOneOut(const ElementSet& base, BlockAnswers& out) const override;

  // Rank of the whole ground set. Verification only; never exposed to the
  // solver through the oracle.
  std::size_t Rank() const { return rank_; }
  // Rank of an arbitrary subset (verification and test oracles).
  std::size_t RankOf(const ElementSet& s) const;

  // Realization accessors; throw InputError if the kind does not match.
  const GraphicInstance& graphic() const;
  const BinaryInstance& binary() const;
  const CographicInstance& cographic() const;

 private:
  void CheckIds(const ElementSet& s) const;
  std::size_t ComputeRank() const;

  std::variant<GraphicInstance, BinaryInstance, CographicInstance> realization_;
  std::size_t size_ = 0;
  std::size_t rank_ = 0;
};

// Graphic rank: num_vertices minus the number of connected components of the
// subgraph formed by `edges` (every vertex counts).
std::size_t GraphicRank(const GraphicInstance& graph, const ElementSet& edges);

// Incidence columns over GF(2): edge uv maps to e_u + e_v, a loop to zero.
BinaryInstance IncidenceRealization(const GraphicInstance& graph);

// Connected-component label of every vertex in the subgraph spanned by
// `edges`. Labels are the smallest vertex id of each component.
std::vector<std::uint32_t> ComponentLabels(const GraphicInstance& graph,
                                           const ElementSet& edges);

}  // namespace parbasis

#endif  // PARBASIS_INSTANCE_H_
