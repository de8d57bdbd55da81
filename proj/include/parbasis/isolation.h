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

#ifndef PARBASIS_ISOLATION_H_
#define PARBASIS_ISOLATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parbasis/element_set.h"
#include "parbasis/instance.h"
#include "parbasis/query_ledger.h"

namespace parbasis {

// Number of samples R drawn per isolation round, as a function of the current
// live-set size m.
struct RepetitionPolicy {
  enum class Kind {
    kScaled,  // ceil(factor * m * ln m)
    kLinear,  // ceil(factor * m)
    kFixed,   // fixed
  };
  Kind kind = Kind::kScaled;
  double factor = 64.0;
  std::uint64_t fixed = 0;

  std::uint64_t Count(std::size_t live_size) const;
  // "scaled:64", "linear:32", "fixed:200", or a bare integer (fixed).
  static RepetitionPolicy Parse(const std::string& text);
  std::string ToString() const;
};

struct IsolationConfig {
  // c1 in p^ell = m^(-c1).
  double sampling_exponent = 1.0;
  RepetitionPolicy repetitions;
  // The girth threshold grows as ell <- max(ell + 1, floor(growth * ell)).
  double growth_factor = 2.0;
  std::uint64_t rng_seed = 0;

  void Validate() const;
};

// p = m^(-c1 / ell), clamped to 1. InputError unless m >= 1, ell >= 1 and
// c1 >= 0.
double SamplingRate(std::size_t m, std::size_t girth, double exponent);

// Keeps each element of `live` independently with probability `rate`. The
// result is a pure function of (seed, invocation, index).
ElementSet DrawSample(const ElementSet& live, double rate, std::uint64_t seed,
                      std::uint64_t invocation, std::uint64_t index);

// One round: R samples of `live`, each run through the single-circuit
// detector, returning the distinct circuits found (sorted). `invocation`
// distinguishes calls within a run for the sample streams. When
// `live_independent` is non-null the round also carries the query Ind(live),
// answered into it.
std::vector<Circuit> RecoverCircuitSuperset(QuerySession& session,
                                            const ElementSet& live,
                                            std::size_t girth,
                                            const IsolationConfig& config,
                                            std::uint64_t invocation,
                                            bool* live_independent = nullptr);

// Deterministic counterpart: the samples are fixed sets of positions into
// `live` (position i names live[i]). One round.
std::vector<Circuit> RecoverWithPositionFamily(
    QuerySession& session, const ElementSet& live,
    const std::vector<ElementSet>& position_sets,
    bool* live_independent = nullptr);

// Shared round driver: leave-one-out detectors on make_set(0..count-1), plus
// an optional trailing Ind(*probe) query.
std::vector<Circuit> HarvestUniqueCircuits(
    QuerySession& session, std::size_t count,
    const std::function<ElementSet(std::size_t)>& make_set,
    const ElementSet* probe = nullptr, bool* probe_answer = nullptr);

// Exact probability that, keeping each element independently with
// probability p, every element of `target` survives and no other circuit
// does. Enumerates all outcomes; CapacityError above 20 elements, InputError
// if `target` is not a circuit of the instance.
double UniqueSurvivalProbability(const MatroidInstance& instance,
                                 const Circuit& target, double p);

}  // namespace parbasis

#endif  // PARBASIS_ISOLATION_H_
