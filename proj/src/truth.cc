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

#include "parbasis/truth.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "parbasis/errors.h"
#include "parbasis/union_find.h"

namespace parbasis {
namespace {

void SortCatalog(CircuitCatalog& catalog) {
  std::sort(catalog.circuits.begin(), catalog.circuits.end(),
            [](const Circuit& a, const Circuit& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  if (!catalog.circuits.empty()) catalog.girth = catalog.circuits.front().size();
}

using Words = std::vector<std::uint64_t>;

}  // namespace

std::size_t CircuitCatalog::CountUpTo(std::size_t max_length) const {
  return static_cast<std::size_t>(
      std::count_if(circuits.begin(), circuits.end(),
                    [&](const Circuit& c) { return c.size() <= max_length; }));
}

bool CircuitCatalog::Contains(const Circuit& c) const {
  return std::find(circuits.begin(), circuits.end(), c) != circuits.end();
}

CircuitCatalog EnumerateCircuits(const MatroidInstance& instance) {
  if (instance.kind() == MatroidKind::kGraphic) {
    return EnumerateGraphCycles(instance.graphic());
  }
  return EnumerateMinimalDependentSets(instance);
}

CircuitCatalog EnumerateGraphCycles(const GraphicInstance& graph) {
  const std::size_t m = graph.edges.size();
  const std::size_t words = (m + 63) / 64;
  CircuitCatalog catalog;
  catalog.ground_size = m;

  // Spanning forest with parent pointers for fundamental cycles.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency(
      graph.num_vertices);
  StampedUnionFind dsu(graph.num_vertices);
  std::vector<std::uint32_t> non_tree;
  for (std::uint32_t e = 0; e < m; ++e) {
    const Edge& edge = graph.edges[e];
    if (dsu.Union(edge.u, edge.v)) {
      adjacency[edge.u].push_back({edge.v, e});
      adjacency[edge.v].push_back({edge.u, e});
    } else {
      non_tree.push_back(e);
    }
  }
  if (non_tree.size() > kMaxCycleSpaceDimension) {
    throw CapacityError("cycle space of dimension " +
                        std::to_string(non_tree.size()) + " exceeds the limit " +
                        std::to_string(kMaxCycleSpaceDimension));
  }
  if (non_tree.empty()) return catalog;

  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> parent(graph.num_vertices, none);
  std::vector<std::uint32_t> parent_edge(graph.num_vertices, none);
  std::vector<std::uint32_t> depth(graph.num_vertices, 0);
  std::vector<bool> visited(graph.num_vertices, false);
  for (std::uint32_t root = 0; root < graph.num_vertices; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (auto [y, e] : adjacency[x]) {
        if (visited[y]) continue;
        visited[y] = true;
        parent[y] = x;
        parent_edge[y] = e;
        depth[y] = depth[x] + 1;
        stack.push_back(y);
      }
    }
  }

  std::vector<Words> fundamental;
  for (std::uint32_t e : non_tree) {
    Words cycle(words, 0);
    cycle[e / 64] |= std::uint64_t{1} << (e % 64);
    std::uint32_t a = graph.edges[e].u;
    std::uint32_t b = graph.edges[e].v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      const std::uint32_t pe = parent_edge[a];
      cycle[pe / 64] ^= std::uint64_t{1} << (pe % 64);
      a = parent[a];
    }
    fundamental.push_back(std::move(cycle));
  }

  // Gray-code walk through the cycle space.
  Words current(words, 0);
  std::vector<std::uint32_t> degree(graph.num_vertices, 0);
  StampedUnionFind component(graph.num_vertices);
  std::vector<ElementId> members;
  const std::uint64_t total = std::uint64_t{1} << fundamental.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const int flip = std::countr_zero(step);
    for (std::size_t w = 0; w < words; ++w) current[w] ^= fundamental[flip][w];

    members.clear();
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = current[w]; bits != 0; bits &= bits - 1) {
        members.push_back(
            static_cast<ElementId>(64 * w + std::countr_zero(bits)));
      }
    }
    bool two_regular = true;
    for (ElementId e : members) {
      degree[graph.edges[e].u] = 0;
      degree[graph.edges[e].v] = 0;
    }
    std::size_t touched = 0;
    for (ElementId e : members) {
      for (std::uint32_t v : {graph.edges[e].u, graph.edges[e].v}) {
        if (degree[v]++ == 0) ++touched;
      }
    }
    for (ElementId e : members) {
      if (degree[graph.edges[e].u] != 2 || degree[graph.edges[e].v] != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular) continue;
    component.Reset();
    std::size_t unions = 0;
    for (ElementId e : members) {
      if (component.Union(graph.edges[e].u, graph.edges[e].v)) ++unions;
    }
    if (unions + 1 != touched) continue;
    catalog.circuits.push_back(ElementSet::FromSorted(members));
  }
  SortCatalog(catalog);
  return catalog;
}

CircuitCatalog EnumerateMinimalDependentSets(const MatroidInstance& instance) {
  const std::size_t m = instance.size();
  if (m > kMaxSubsetSearchElements) {
    throw CapacityError("subset search over " + std::to_string(m) +
                        " elements exceeds the limit " +
                        std::to_string(kMaxSubsetSearchElements));
  }
  CircuitCatalog catalog;
  catalog.ground_size = m;
  // dependent[mask]: the subset contains a circuit.
  std::vector<std::uint8_t> dependent(std::size_t{1} << m, 0);
  const std::size_t max_size = std::min(m, instance.Rank() + 1);
  std::vector<ElementId> ids;
  for (std::size_t k = 1; k <= max_size; ++k) {
    // Gosper's hack over k-subsets of m bits.
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << m;
    while (mask < limit) {
      bool contains = false;
      for (std::uint32_t bits = mask; bits != 0 && !contains; bits &= bits - 1) {
        const std::uint32_t without = mask & ~(bits & (0 - bits));
        if (dependent[without]) contains = true;
      }
      if (contains) {
        dependent[mask] = 1;
      } else {
        ids.clear();
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
          ids.push_back(static_cast<ElementId>(std::countr_zero(bits)));
        }
        ElementSet s = ElementSet::FromSorted(ids);
        if (!instance.IsIndependent(s)) {
          dependent[mask] = 1;
          catalog.circuits.push_back(std::move(s));
        }
      }
      const std::uint32_t low = mask & (0 - mask);
      const std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  SortCatalog(catalog);
  return catalog;
}

bool CheckCountingBound(const CircuitCatalog& catalog, std::size_t m,
                        unsigned alpha) {
  if (catalog.circuits.empty() || !catalog.girth) {
    throw InputError("counting bound needs a non-empty catalog");
  }
  if (alpha == 0) throw InputError("alpha must be a positive integer");
  const std::size_t count = catalog.CountUpTo(alpha * *catalog.girth);
  const long double bound =
      std::pow(2.0L * static_cast<long double>(m), 2.0L * alpha);
  return static_cast<long double>(count) <= bound;
}

bool CheckOverlapLemma(const CircuitCatalog& catalog) {
  if (!catalog.girth) return true;
  const std::size_t girth = *catalog.girth;
  for (const Circuit& c : catalog.circuits) {
    if (100 * c.size() > 101 * girth) break;  // sorted by size
    for (const Circuit& other : catalog.circuits) {
      if (other == c) continue;
      if (4 * DifferenceSize(other, c) < other.size()) return false;
    }
  }
  return true;
}

bool CheckXorClosure(const CircuitCatalog& catalog,
                     const MatroidInstance& instance) {
  const auto& cs = catalog.circuits;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (instance.IsIndependent(SymmetricDifference(cs[i], cs[j]))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace parbasis
