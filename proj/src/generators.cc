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


#include "parbasis/generators.h"

#include "parbasis/errors.h"
#include "parbasis/random.h"

namespace parbasis {

GraphicInstance CycleGraph(std::uint32_t n) {
  if (n == 0) throw InputError("cycle needs at least one vertex");
  GraphicInstance g;
  g.num_vertices = n;
  for (std::uint32_t i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
  return g;
}

GraphicInstance PathGraph(std::uint32_t n) {
  if (n == 0) throw InputError("path needs at least one vertex");
  GraphicInstance g;
  g.num_vertices = n;
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

GraphicInstance CompleteGraph(std::uint32_t n) {
  if (n == 0) throw InputError("complete graph needs at least one vertex");
  GraphicInstance g;
  g.num_vertices = n;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) g.edges.push_back({u, v});
  }
  return g;
}

GraphicInstance RandomMultigraph(std::uint32_t n, std::size_t m,
                                 std::uint64_t seed, bool allow_loops) {
  if (n == 0) throw InputError("random graph needs at least one vertex");
  if (n == 1 && !allow_loops && m > 0) {
    throw InputError("one vertex admits only loops");
  }
  Rng rng(StreamKey(seed, 0x67726170, n));
  GraphicInstance g;
  g.num_vertices = n;
  g.edges.reserve(m);
  while (g.edges.size() < m) {
    const auto u = static_cast<std::uint32_t>(rng.Below(n));
    const auto v = static_cast<std::uint32_t>(rng.Below(n));
    if (u == v && !allow_loops) continue;
    g.edges.push_back({u, v});
  }
  return g;
}

BinaryInstance RandomBinary(std::size_t m, std::size_t r, double density,
                            std::uint64_t seed) {
  if (r == 0) throw InputError("dimension must be positive");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InputError("density must lie in [0, 1]");
  }
  Rng rng(StreamKey(seed, 0x62696e, r));
  const BernoulliThreshold keep(density);
  BinaryInstance b;
  b.dimension = r;
  for (std::size_t j = 0; j < m; ++j) {
    Gf2Vector column(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (keep.Accept(rng())) column.Set(i, true);
    }
    b.columns.push_back(std::move(column));
  }
  return b;
}

}  // namespace parbasis
