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

#ifndef PARBASIS_SOLVER_H_
#define PARBASIS_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parbasis/element_set.h"
#include "parbasis/instance.h"
#include "parbasis/isolation.h"
#include "parbasis/query_ledger.h"

namespace parbasis {

// Deterministic replacement for random isolation samples: for a live set of
// `live_size` elements with no circuit of length <= girth, returns sets of
// positions into the live set that isolate every circuit of length in
// (girth, growth * girth].
class IsolatingFamilies {
 public:
  virtual ~IsolatingFamilies() = default;
  virtual std::vector<ElementSet> PositionSets(std::size_t live_size,
                                               std::size_t girth,
                                               double growth) const = 0;
};

struct SolverConfig {
  // g0: every circuit of length <= g0 is enumerated in the first round.
  std::size_t initial_girth = 4;
  // Maximum number of subsets the first round may enumerate.
  std::uint64_t enumeration_budget = 10'000'000;
  // When the budget does not admit g0, lower it (down to 1) instead of
  // failing with CapacityError.
  bool clamp_initial_girth = true;
  IsolationConfig isolation;
  // Live sets at most this large are finished by a greedy scan.
  std::size_t small_fallback_threshold = 12;
  // Adds Ind(live) to every round and stops as soon as it answers true.
  bool probe_live_independence = true;
  // When set, isolation rounds use these sets instead of random samples.
  const IsolatingFamilies* families = nullptr;

  void Validate() const;
};

struct SolveReport {
  ElementSet basis;
  bool success = false;
  std::string failure;
  std::size_t rounds = 0;
  std::uint64_t max_queries_per_round = 0;
  std::uint64_t total_queries = 0;
  std::size_t initial_girth = 0;
  // Threshold ell of every isolation round, in order.
  std::vector<std::size_t> girth_trace;
  // Elements deleted by the enumeration round and each isolation round.
  std::vector<ElementSet> deleted_trace;
  std::size_t greedy_rounds = 0;
  unsigned attempts = 1;
  std::uint64_t seed = 0;
};

struct SolveResult {
  SolveReport report;
  QueryLedger ledger;
};

// ell <- max(ell + 1, floor(growth * ell)).
std::size_t NextGirth(std::size_t girth, double growth);

// Sum_{k=0}^{min(g0, n)} C(n, k), saturating at UINT64_MAX.
std::uint64_t SubsetCountUpTo(std::size_t n, std::size_t max_size);

// Largest g <= config.initial_girth (and >= 1) whose enumeration fits the
// budget. CapacityError if clamping is disabled and g0 does not fit.
std::size_t EffectiveInitialGirth(std::size_t live_size,
                                  const SolverConfig& config);

// One round: the leave-one-out detector on every subset of `live` of size at
// most `max_size`. Returns every circuit of length <= max_size.
// CapacityError if the subset count exceeds `budget`.
std::vector<Circuit> EnumerateShortCircuits(QuerySession& session,
                                            const ElementSet& live,
                                            std::size_t max_size,
                                            std::uint64_t budget);

struct Deletion {
  ElementSet live;
  ElementSet deleted;
};

// Removes, simultaneously, the largest id of every circuit. InputError on an
// empty circuit or one that is not inside `live`.
Deletion DeleteLargestIndexed(const ElementSet& live,
                              const std::vector<Circuit>& circuits);

// The algorithm proper: it sees the instance only through `session`. The
// returned report has the basis and traces; success is not yet decided.
SolveReport RunSolver(QuerySession& session, const SolverConfig& config);

// Ind(basis) and |basis| == rank.
bool VerifyBasis(const MatroidInstance& instance, const ElementSet& basis);

// Runs the solver and verifies its output against the instance.
SolveResult FindBasis(const MatroidInstance& instance,
                      const SolverConfig& config,
                      LedgerOptions ledger_options = {});

// As FindBasis, re-running with seeds seed + 1, seed + 2, ... while
// verification fails, at most `retries` extra times.
SolveResult FindBasisWithRetries(const MatroidInstance& instance,
                                 SolverConfig config, unsigned retries,
                                 LedgerOptions ledger_options = {});

nlohmann::json ReportToJson(const SolveReport& report);
SolveReport ReportFromJson(const nlohmann::json& json);

}  // namespace parbasis

#endif  // PARBASIS_SOLVER_H_
