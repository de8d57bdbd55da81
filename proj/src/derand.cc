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


#include "parbasis/derand.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "parbasis/errors.h"
#include "parbasis/isolation.h"
#include "parbasis/parallel.h"
#include "parbasis/truth.h"

namespace parbasis {
namespace {

constexpr std::uint64_t kMaxTrivialFamily = 1'000'000;

std::uint64_t ToMask(const ElementSet& s) {
  std::uint64_t mask = 0;
  for (ElementId e : s) mask |= std::uint64_t{1} << e;
  return mask;
}

ElementSet FromMask(std::uint64_t mask) {
  std::vector<ElementId> ids;
  for (ElementId e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) ids.push_back(e);
  }
  return ElementSet::FromSorted(std::move(ids));
}

bool Isolates(std::uint64_t set, std::uint64_t target,
              const std::vector<std::uint64_t>& circuits) {
  if ((target & ~set) != 0) return false;
  for (std::uint64_t c : circuits) {
    if (c != target && (c & ~set) == 0) return false;
  }
  return true;
}

struct Enumerator {
  std::size_t m;
  std::size_t max_vertices;
  std::size_t girth;
  std::size_t max_target;
  bool loops;
  std::vector<Edge> edges;
  std::uint64_t visited = 0;
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  std::vector<UniverseMember> members;

  void Leaf(std::uint32_t used) {
    if (++visited > kMaxUniverseGraphs) {
      throw CapacityError("graph universe exceeds " +
                          std::to_string(kMaxUniverseGraphs) + " graphs");
    }
    GraphicInstance graph;
    graph.num_vertices = std::max<std::uint32_t>(used, 1);
    graph.edges = edges;
    const CircuitCatalog catalog = EnumerateGraphCycles(graph);
    if (catalog.girth.has_value() && *catalog.girth < girth) return;
    std::vector<std::uint64_t> masks;
    std::vector<std::uint64_t> targets;
    for (const Circuit& c : catalog.circuits) {
      masks.push_back(ToMask(c));
      if (c.size() > girth && c.size() <= max_target) {
        targets.push_back(masks.back());
      }
    }
    if (targets.empty()) return;
    std::vector<std::uint64_t> key = masks;
    std::sort(key.begin(), key.end());
    if (!seen.emplace(std::move(key), members.size()).second) return;
    members.push_back({std::move(graph), std::move(masks), std::move(targets)});
  }

  // Vertices are introduced in increasing order, so each graph is visited
  // once per way of naming its edges, not once per vertex renaming.
  void Extend(std::uint32_t used) {
    if (edges.size() == m) {
      Leaf(used);
      return;
    }
    const auto n = static_cast<std::uint32_t>(max_vertices);
    auto push = [&](std::uint32_t u, std::uint32_t v, std::uint32_t next) {
      edges.push_back({u, v});
      Extend(next);
      edges.pop_back();
    };
    for (std::uint32_t u = 0; u < used; ++u) {
      for (std::uint32_t v = u; v < used; ++v) {
        if (u == v && !loops) continue;
        push(u, v, used);
      }
    }
    if (used < n) {
      for (std::uint32_t u = 0; u < used; ++u) push(u, used, used + 1);
      if (loops) push(used, used, used + 1);
    }
    if (used + 1 < n) push(used, used + 1, used + 2);
  }
};

void ForEachSubset(std::size_t m, std::size_t size,
                   const std::function<void(const std::vector<ElementId>&)>& fn) {
  std::vector<ElementId> current;
  std::function<void(ElementId)> rec = [&](ElementId start) {
    if (current.size() == size) {
      fn(current);
      return;
    }
    for (ElementId e = start; e + (size - current.size()) <= m; ++e) {
      current.push_back(e);
      rec(e + 1);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::size_t TargetMaxLength(std::size_t girth, double growth) {
  return static_cast<std::size_t>(
      std::floor(static_cast<long double>(growth) * girth + 1e-9L));
}

std::size_t GraphUniverse::TargetCount() const {
  std::size_t total = 0;
  for (const UniverseMember& member : members) total += member.targets.size();
  return total;
}

GraphUniverse BuildGraphUniverse(std::size_t m, std::size_t max_vertices,
                                 std::size_t girth, double growth) {
  if (m == 0 || max_vertices == 0) {
    throw InputError("universe needs m >= 1 and at least one vertex");
  }
  if (!(growth > 1.0)) throw InputError("growth factor must exceed 1");
  if (m > kMaxUniverseElements) {
    throw CapacityError("universe limited to " +
                        std::to_string(kMaxUniverseElements) + " edges");
  }
  Enumerator walk{m, max_vertices, girth, TargetMaxLength(girth, growth),
                  girth <= 1, {}, 0, {}, {}};
  walk.Extend(0);
  GraphUniverse universe;
  universe.m = m;
  universe.max_vertices = max_vertices;
  universe.girth = girth;
  universe.growth = growth;
  universe.graphs_visited = walk.visited;
  universe.members = std::move(walk.members);
  return universe;
}

FamilyVerdict VerifyUniversalFamily(const UniversalFamily& family,
                                    const GraphUniverse& universe) {
  if (family.m != universe.m) {
    throw InputError("family is over " + std::to_string(family.m) +
                     " elements but the universe over " +
                     std::to_string(universe.m));
  }
  std::vector<std::uint64_t> sets;
  sets.reserve(family.sets.size());
  for (const ElementSet& s : family.sets) {
    if (!s.empty() && s.back() >= family.m) {
      throw InputError("family set " + s.DebugString() + " is out of range");
    }
    sets.push_back(ToMask(s));
  }

  const std::size_t n = universe.members.size();
  const std::size_t chunks = ChunkCount(n);
  std::vector<std::size_t> covered(chunks, 0);
  // First uncovered (member, target) per chunk.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> first(chunks);
  ParallelChunks(n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const UniverseMember& member = universe.members[i];
      for (std::size_t t = 0; t < member.targets.size(); ++t) {
        const bool hit = std::any_of(sets.begin(), sets.end(), [&](auto set) {
          return Isolates(set, member.targets[t], member.circuits);
        });
        if (hit) {
          ++covered[chunk];
        } else if (!first[chunk].has_value()) {
          first[chunk] = std::make_pair(i, t);
        }
      }
    }
  });

  FamilyVerdict verdict;
  verdict.total = universe.TargetCount();
  for (std::size_t c = 0; c < chunks; ++c) verdict.covered += covered[c];
  for (std::size_t c = 0; c < chunks; ++c) {
    if (first[c].has_value()) {
      const UniverseMember& member = universe.members[first[c]->first];
      verdict.counterexample =
          Counterexample{member.graph, FromMask(member.targets[first[c]->second])};
      break;
    }
  }
  verdict.universal = verdict.covered == verdict.total;
  return verdict;
}

SearchResult SearchUniversalFamily(const GraphUniverse& universe,
                                   const SearchOptions& options) {
  SearchResult result;
  if (options.budget == 0) return result;
  const double rate =
      SamplingRate(universe.m, std::max<std::size_t>(universe.girth, 1),
                   options.sampling_exponent);
  const ElementSet ground = ElementSet::Range(universe.m);
  const std::size_t family_size = options.family_size != 0
                                      ? options.family_size
                                      : std::size_t{1} << universe.m;
  for (std::uint64_t c = 0; c < options.budget; ++c) {
    UniversalFamily family;
    family.m = universe.m;
    family.girth = universe.girth;
    family.growth = universe.growth;
    for (std::size_t j = 0; j < family_size; ++j) {
      family.sets.push_back(DrawSample(ground, rate, options.seed, c, j));
    }
    const FamilyVerdict verdict = VerifyUniversalFamily(family, universe);
    ++result.candidates_tried;
    result.best_coverage = std::max(result.best_coverage, verdict.Coverage());
    if (verdict.universal) {
      family.verified = true;
      result.family = std::move(family);
      return result;
    }
  }
  return result;
}

std::vector<ElementSet> TrivialFamily(std::size_t m, std::size_t girth,
                                      double growth) {
  const std::size_t top = std::min(TargetMaxLength(girth, growth), m);
  std::vector<ElementSet> sets;
  for (std::size_t size = girth + 1; size <= top; ++size) {
    ForEachSubset(m, size, [&](const std::vector<ElementId>& ids) {
      if (sets.size() >= kMaxTrivialFamily) {
        throw CapacityError("trivial family exceeds " +
                            std::to_string(kMaxTrivialFamily) + " sets");
      }
      sets.push_back(ElementSet::FromSorted(ids));
    });
  }
  return sets;
}

void FamilyTable::Add(const UniversalFamily& family) {
  families_[{family.m, family.girth}] = family;
}

std::vector<ElementSet> FamilyTable::PositionSets(std::size_t live_size,
                                                  std::size_t girth,
                                                  double growth) const {
  const auto it = families_.find({live_size, girth});
  if (it != families_.end() && it->second.growth == growth) {
    return it->second.sets;
  }
  return TrivialFamily(live_size, girth, growth);
}

nlohmann::json FamilyToJson(const UniversalFamily& family) {
  nlohmann::json sets = nlohmann::json::array();
  for (const ElementSet& s : family.sets) sets.push_back(s.ids());
  return {{"m", family.m},
          {"girth", family.girth},
          {"growth", family.growth},
          {"verified", family.verified},
          {"sets", sets}};
}

UniversalFamily FamilyFromJson(const nlohmann::json& json) {
  UniversalFamily family;
  try {
    family.m = json.at("m").get<std::size_t>();
    family.girth = json.at("girth").get<std::size_t>();
    family.growth = json.at("growth").get<double>();
    family.verified = json.value("verified", false);
    for (const auto& s : json.at("sets")) {
      family.sets.push_back(
          ElementSet::FromUnsorted(s.get<std::vector<ElementId>>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed family: ") + e.what());
  }
  return family;
}

nlohmann::json VerdictToJson(const FamilyVerdict& verdict) {
  nlohmann::json out = {{"universal", verdict.universal},
                        {"covered", verdict.covered},
                        {"total", verdict.total},
                        {"coverage", verdict.Coverage()}};
  if (verdict.counterexample.has_value()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : verdict.counterexample->graph.edges) {
      edges.push_back({e.u, e.v});
    }
    out["counterexample"] = {
        {"num_vertices", verdict.counterexample->graph.num_vertices},
        {"edges", edges},
        {"circuit", verdict.counterexample->circuit.ids()}};
  }
  return out;
}

}  // namespace parbasis
