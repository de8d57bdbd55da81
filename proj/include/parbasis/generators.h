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


#ifndef PARBASIS_GENERATORS_H_
#define PARBASIS_GENERATORS_H_

#include <cstddef>
#include <cstdint>

#include "parbasis/instance.h"

namespace parbasis {

// C_n: edge i joins i and i + 1 (mod n). n = 1 is a loop, n = 2 a parallel pair.
GraphicInstance CycleGraph(std::uint32_t n);

// Path on n vertices (n - 1 edges).
GraphicInstance PathGraph(std::uint32_t n);

// K_n, edges in lexicographic order of (u, v), u < v.
GraphicInstance CompleteGraph(std::uint32_t n);

// `m` edges with endpoints drawn uniformly and independently from n vertices.
// Loops are redrawn unless `allow_loops`; parallel edges may occur.
GraphicInstance RandomMultigraph(std::uint32_t n, std::size_t m,
                                 std::uint64_t seed, bool allow_loops = false);

// `m` random columns in GF(2)^r, each coordinate set with probability
// `density`.
BinaryInstance RandomBinary(std::size_t m, std::size_t r, double density,
                            std::uint64_t seed);

}  // namespace parbasis

#endif  // PARBASIS_GENERATORS_H_
