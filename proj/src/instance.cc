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

#include "parbasis/instance.h"

#include <algorithm>
#include <bit>
#include <string>

#include "parbasis/errors.h"
#include "parbasis/union_find.h"

namespace parbasis {
namespace {

StampedUnionFind& ScratchUnionFind(std::uint32_t n) {
  thread_local StampedUnionFind dsu;
  if (dsu.size() < n) dsu.Resize(n);
  dsu.Reset();
  return dsu;
}

// Rank of the graphic matroid restricted to the complement of `excluded`.
std::size_t ComplementGraphicRank(const GraphicInstance& graph,
                                  const ElementSet& excluded,
                                  StampedUnionFind& dsu) {
  std::size_t rank = 0;
  auto skip = excluded.begin();
  for (ElementId e = 0; e < graph.edges.size(); ++e) {
    while (skip != excluded.end() && *skip < e) ++skip;
    if (skip != excluded.end() && *skip == e) continue;
    if (dsu.Union(graph.edges[e].u, graph.edges[e].v)) ++rank;
  }
  return rank;
}

// Marks the unique cycle of `base`, which consists of the forest formed by
// every edge except base[closing] plus that closing edge.
void MarkUniqueCycle(const GraphicInstance& graph, const ElementSet& base,
                     std::size_t closing, std::vector<std::uint8_t>& marks) {
  const Edge& closer = graph.edges[base[closing]];
  marks[closing] = 1;
  if (closer.u == closer.v) return;

  // Adjacency over the touched vertices, keyed through a stamped head array.
  thread_local std::vector<std::int64_t> head;
  thread_local std::vector<std::uint32_t> head_stamp;
  thread_local std::uint32_t generation = 0;
  thread_local std::vector<std::int64_t> next;
  thread_local std::vector<std::uint32_t> target;
  thread_local std::vector<std::uint32_t> via;
  thread_local std::vector<std::int64_t> parent_arc;
  thread_local std::vector<std::uint32_t> seen_stamp;
  if (head.size() < graph.num_vertices) {
    head.assign(graph.num_vertices, -1);
    head_stamp.assign(graph.num_vertices, 0);
    parent_arc.assign(graph.num_vertices, -1);
    seen_stamp.assign(graph.num_vertices, 0);
    generation = 0;
  }
  if (++generation == 0) {
    std::fill(head_stamp.begin(), head_stamp.end(), 0);
    std::fill(seen_stamp.begin(), seen_stamp.end(), 0);
    generation = 1;
  }
  auto head_of = [&](std::uint32_t v) -> std::int64_t& {
    if (head_stamp[v] != generation) {
      head_stamp[v] = generation;
      head[v] = -1;
    }
    return head[v];
  };
  next.clear();
  target.clear();
  via.clear();
  auto add_arc = [&](std::uint32_t from, std::uint32_t to, std::uint32_t k) {
    std::int64_t& h = head_of(from);
    next.push_back(h);
    target.push_back(to);
    via.push_back(k);
    h = static_cast<std::int64_t>(target.size() - 1);
  };
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (k == closing) continue;
    const Edge& e = graph.edges[base[k]];
    if (e.u == e.v) continue;
    add_arc(e.u, e.v, static_cast<std::uint32_t>(k));
    add_arc(e.v, e.u, static_cast<std::uint32_t>(k));
  }

  // Walk the forest from u until v is reached.
  std::vector<std::uint32_t> queue{closer.u};
  seen_stamp[closer.u] = generation;
  parent_arc[closer.u] = -1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint32_t x = queue[qi];
    if (x == closer.v) break;
    for (std::int64_t a = head_of(x); a >= 0; a = next[a]) {
      const std::uint32_t y = target[a];
      if (seen_stamp[y] == generation) continue;
      seen_stamp[y] = generation;
      parent_arc[y] = a;
      queue.push_back(y);
    }
  }
  for (std::uint32_t x = closer.v; x != closer.u;) {
    const std::int64_t a = parent_arc[x];
    marks[via[a]] = 1;
    // The arc a goes parent -> x; its partner arc (a ^ 1) goes x -> parent.
    x = target[a ^ 1];
  }
}

void GraphicLeaveOneOut(const GraphicInstance& graph, const ElementSet& base,
                        BlockAnswers& out) {
  StampedUnionFind& dsu = ScratchUnionFind(graph.num_vertices);
  std::size_t closing_edges = 0;
  std::size_t closing = 0;
  for (std::size_t k = 0; k < base.size() && closing_edges < 2; ++k) {
    const Edge& e = graph.edges[base[k]];
    if (!dsu.Union(e.u, e.v)) {
      if (closing_edges == 0) closing = k;
      ++closing_edges;
    }
  }
  out.whole = closing_edges == 0;
  out.without.assign(base.size(), closing_edges == 0 ? 1 : 0);
  if (closing_edges == 1) MarkUniqueCycle(graph, base, closing, out.without);
}

void BinaryLeaveOneOut(const BinaryInstance& binary, const ElementSet& base,
                       BlockAnswers& out) {
  const std::size_t k = base.size();
  const std::size_t vec_words = (binary.dimension + 63) / 64;
  const std::size_t comb_words = (k + 63) / 64;
  const std::size_t stride = vec_words + comb_words;
  std::vector<std::uint64_t> rows;
  rows.reserve(stride * std::min(k, binary.dimension + 1));
  std::vector<std::size_t> pivots;
  std::vector<std::uint64_t> row(stride);
  std::vector<std::uint64_t> dependency;
  std::size_t dependencies = 0;

  for (std::size_t i = 0; i < k && dependencies < 2; ++i) {
    std::fill(row.begin(), row.end(), 0);
    const auto words = binary.columns[base[i]].words();
    std::copy(words.begin(), words.end(), row.begin());
    row[vec_words + i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t b = 0; b < pivots.size(); ++b) {
      const std::size_t p = pivots[b];
      if ((row[p / 64] >> (p % 64)) & 1u) {
        const std::uint64_t* src = rows.data() + b * stride;
        for (std::size_t w = 0; w < stride; ++w) row[w] ^= src[w];
      }
    }
    bool zero = true;
    for (std::size_t w = 0; w < vec_words; ++w) {
      if (row[w] != 0) {
        pivots.push_back(64 * w +
                         static_cast<std::size_t>(std::countr_zero(row[w])));
        rows.insert(rows.end(), row.begin(), row.end());
        zero = false;
        break;
      }
    }
    if (zero) {
      ++dependencies;
      dependency.assign(row.begin() + vec_words, row.end());
    }
  }
  out.whole = dependencies == 0;
  out.without.assign(k, dependencies == 0 ? 1 : 0);
  if (dependencies == 1) {
    for (std::size_t i = 0; i < k; ++i) {
      out.without[i] = (dependency[i / 64] >> (i % 64)) & 1u;
    }
  }
}

bool BinaryIndependent(const BinaryInstance& binary, const ElementSet& s) {
  if (s.size() > binary.dimension) return false;
  std::vector<Gf2Vector> vectors;
  vectors.reserve(s.size());
  for (ElementId e : s) vectors.push_back(binary.columns[e]);
  return Gf2Rank(vectors) == s.size();
}

}  // namespace

void GraphicInstance::Validate() const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u >= num_vertices || edges[i].v >= num_vertices) {
      throw InputError("edge " + std::to_string(i) +
                       " has a vertex id >= num_vertices (" +
                       std::to_string(num_vertices) + ")");
    }
  }
}

void BinaryInstance::Validate() const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].dimension() != dimension) {
      throw InputError("column " + std::to_string(i) +
                       " has the wrong dimension");
    }
  }
}

void IndependenceOracle::LeaveOneOut(const ElementSet& base,
                                     BlockAnswers& out) const {
  out.whole = IsIndependent(base);
  out.without.assign(base.size(), 0);
  for (std::size_t k = 0; k < base.size(); ++k) {
    out.without[k] = IsIndependent(base.Without(base[k])) ? 1 : 0;
  }
}

std::string KindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kBinary:
      return "binary";
    case MatroidKind::kCographic:
      return "cographic";
  }
  return "unknown";
}

MatroidInstance::MatroidInstance(GraphicInstance graphic) {
  graphic.Validate();
  size_ = graphic.edges.size();
  realization_ = std::move(graphic);
  rank_ = ComputeRank();
}

MatroidInstance::MatroidInstance(BinaryInstance binary) {
  binary.Validate();
  size_ = binary.columns.size();
  realization_ = std::move(binary);
  rank_ = ComputeRank();
}

MatroidInstance::MatroidInstance(CographicInstance cographic) {
  cographic.graph.Validate();
  size_ = cographic.graph.edges.size();
  realization_ = std::move(cographic);
  rank_ = ComputeRank();
}

MatroidKind MatroidInstance::kind() const {
  return static_cast<MatroidKind>(realization_.index());
}

const GraphicInstance& MatroidInstance::graphic() const {
  if (const auto* g = std::get_if<GraphicInstance>(&realization_)) return *g;
  throw InputError("instance is not graphic");
}

const BinaryInstance& MatroidInstance::binary() const {
  if (const auto* b = std::get_if<BinaryInstance>(&realization_)) return *b;
  throw InputError("instance is not binary");
}

const CographicInstance& MatroidInstance::cographic() const {
  if (const auto* c = std::get_if<CographicInstance>(&realization_)) return *c;
  throw InputError("instance is not cographic");
}

void MatroidInstance::CheckIds(const ElementSet& s) const {
  if (!s.empty() && s.back() >= size_) {
    throw InputError("unknown element id " + std::to_string(s.back()) +
                     " (ground set has " + std::to_string(size_) +
                     " elements)");
  }
}

bool MatroidInstance::IsIndependent(const ElementSet& s) const {
  CheckIds(s);
  switch (kind()) {
    case MatroidKind::kGraphic: {
      const GraphicInstance& g = graphic();
      StampedUnionFind& dsu = ScratchUnionFind(g.num_vertices);
      for (ElementId e : s) {
        if (!dsu.Union(g.edges[e].u, g.edges[e].v)) return false;
      }
      return true;
    }
    case MatroidKind::kBinary:
      return BinaryIndependent(binary(), s);
    case MatroidKind::kCographic: {
      const GraphicInstance& g = cographic().graph;
      StampedUnionFind& dsu = ScratchUnionFind(g.num_vertices);
      return ComplementGraphicRank(g, s, dsu) == size_ - rank_;
    }
  }
  return false;
}

void MatroidInstance::LeaveOneOut(const ElementSet& base,
                                  BlockAnswers& out) const {
  CheckIds(base);
  switch (kind()) {
    case MatroidKind::kGraphic:
      GraphicLeaveOneOut(graphic(), base, out);
      return;
    case MatroidKind::kBinary:
      BinaryLeaveOneOut(binary(), base, out);
      return;
    case MatroidKind::kCographic: {
      // With F = E \ base, the cographic nullity of base is the graphic rank
      // deficiency d = r(E) - r(F). Removing e from base adds e to F, which
      // restores full rank iff d == 1 and e joins two components of F.
      const GraphicInstance& g = cographic().graph;
      StampedUnionFind& dsu = ScratchUnionFind(g.num_vertices);
      const std::size_t graph_rank = size_ - rank_;
      const std::size_t deficiency =
          graph_rank - ComplementGraphicRank(g, base, dsu);
      out.whole = deficiency == 0;
      out.without.assign(base.size(), deficiency == 0 ? 1 : 0);
      if (deficiency == 1) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          const Edge& e = g.edges[base[k]];
          out.without[k] = dsu.Find(e.u) != dsu.Find(e.v) ? 1 : 0;
        }
      }
      return;
    }
  }
}

std::size_t MatroidInstance::RankOf(const ElementSet& s) const {
  CheckIds(s);
  switch (kind()) {
    case MatroidKind::kGraphic:
      return GraphicRank(graphic(), s);
    case MatroidKind::kBinary: {
      std::vector<Gf2Vector> vectors;
      for (ElementId e : s) vectors.push_back(binary().columns[e]);
      return Gf2Rank(vectors);
    }
    case MatroidKind::kCographic: {
      const GraphicInstance& g = cographic().graph;
      StampedUnionFind& dsu = ScratchUnionFind(g.num_vertices);
      const std::size_t graph_rank = size_ - rank_;
      return s.size() - (graph_rank - ComplementGraphicRank(g, s, dsu));
    }
  }
  return 0;
}

std::size_t MatroidInstance::ComputeRank() const {
  const ElementSet all = ElementSet::Range(size_);
  switch (kind()) {
    case MatroidKind::kGraphic:
      return GraphicRank(graphic(), all);
    case MatroidKind::kBinary:
      return Gf2Rank(binary().columns);
    case MatroidKind::kCographic:
      return size_ - GraphicRank(cographic().graph, all);
  }
  return 0;
}

std::size_t GraphicRank(const GraphicInstance& graph, const ElementSet& edges) {
  StampedUnionFind& dsu = ScratchUnionFind(graph.num_vertices);
  std::size_t rank = 0;
  for (ElementId e : edges) {
    if (dsu.Union(graph.edges[e].u, graph.edges[e].v)) ++rank;
  }
  return rank;
}

BinaryInstance IncidenceRealization(const GraphicInstance& graph) {
  BinaryInstance out;
  out.dimension = std::max<std::uint32_t>(graph.num_vertices, 1);
  out.columns.reserve(graph.edges.size());
  for (const Edge& e : graph.edges) {
    Gf2Vector column(out.dimension);
    column.Flip(e.u);
    column.Flip(e.v);
    out.columns.push_back(std::move(column));
  }
  return out;
}

std::vector<std::uint32_t> ComponentLabels(const GraphicInstance& graph,
                                           const ElementSet& edges) {
  StampedUnionFind dsu(graph.num_vertices);
  for (ElementId e : edges) dsu.Union(graph.edges[e].u, graph.edges[e].v);
  std::vector<std::uint32_t> smallest(graph.num_vertices, graph.num_vertices);
  for (std::uint32_t v = 0; v < graph.num_vertices; ++v) {
    const std::uint32_t root = dsu.Find(v);
    smallest[root] = std::min(smallest[root], v);
  }
  std::vector<std::uint32_t> labels(graph.num_vertices);
  for (std::uint32_t v = 0; v < graph.num_vertices; ++v) {
    labels[v] = smallest[dsu.Find(v)];
  }
  return labels;
}

}  // namespace parbasis
