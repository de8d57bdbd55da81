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

#ifndef PARBASIS_TRUTH_H_
#define PARBASIS_TRUTH_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "parbasis/element_set.h"
#include "parbasis/instance.h"

namespace parbasis {

// Capacity of the exhaustive enumerators.
inline constexpr std::size_t kMaxSubsetSearchElements = 22;
inline constexpr std::size_t kMaxCycleSpaceDimension = 22;

// Every circuit of an instance, sorted by (size, ids).
struct CircuitCatalog {
  std::size_t ground_size = 0;
  std::vector<Circuit> circuits;
  // Minimum circuit length; nullopt when the ground set is independent.
  std::optional<std::size_t> girth;

  std::size_t CountUpTo(std::size_t max_length) const;
  bool Contains(const Circuit& c) const;
};

// Graphic instances go through cycle-space enumeration, everything else
// through the minimal-dependent-subset search.
CircuitCatalog EnumerateCircuits(const MatroidInstance& instance);

// Enumerates the 2^k elements of the cycle space (k = cyclomatic number) and
// keeps the connected 2-regular ones. CapacityError if k exceeds
// kMaxCycleSpaceDimension.
CircuitCatalog EnumerateGraphCycles(const GraphicInstance& graph);

// Visits subsets in size order; a subset is a circuit iff it is dependent
// while every one-smaller subset is not. Works for any realization.
// CapacityError above kMaxSubsetSearchElements elements.
CircuitCatalog EnumerateMinimalDependentSets(const MatroidInstance& instance);

// #{C : |C| <= alpha * girth} <= (2m)^(2 alpha). InputError on an empty
// catalog or alpha == 0.
bool CheckCountingBound(const CircuitCatalog& catalog, std::size_t m,
                        unsigned alpha);

// For every C with |C| <= 1.01 * girth and every other C':
// |C' \ C| >= |C'| / 4.
bool CheckOverlapLemma(const CircuitCatalog& catalog);

// For every pair of distinct circuits, C1 xor C2 contains a circuit. By
// completeness of the catalog this is tested as dependence of C1 xor C2.
bool CheckXorClosure(const CircuitCatalog& catalog,
                     const MatroidInstance& instance);

}  // namespace parbasis

#endif  // PARBASIS_TRUTH_H_
