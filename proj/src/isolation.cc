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

#include "parbasis/isolation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <set>
#include <string>

#include "parbasis/detect.h"
#include "parbasis/errors.h"
#include "parbasis/random.h"
#include "parbasis/truth.h"

namespace parbasis {
namespace {

constexpr std::size_t kMaxSurvivalElements = 20;

}  // namespace

std::vector<Circuit> HarvestUniqueCircuits(
    QuerySession& session, std::size_t count,
    const std::function<ElementSet(std::size_t)>& make_set,
    const ElementSet* probe, bool* probe_answer) {
  const std::size_t blocks = count + (probe != nullptr ? 1 : 0);
  std::vector<Circuit> found;
  std::mutex found_mutex;
  session.RunRound(
      blocks,
      [&](std::size_t begin, std::size_t end,
          const QuerySession::BlockEmitter& emit) {
        for (std::size_t i = begin; i < end; ++i) {
          if (i == count) {
            emit(QueryBlock{*probe, QueryShape::kSingle});
          } else {
            emit(QueryBlock{make_set(i), QueryShape::kLeaveOneOut});
          }
        }
      },
      [&](std::size_t i, const QueryBlock& block, const BlockAnswers& answers) {
        if (i == count) {
          if (probe_answer != nullptr) *probe_answer = answers.whole;
          return;
        }
        DetectOutcome outcome = InterpretDetectAnswers(block.base, answers);
        if (outcome.kind != DetectOutcome::Kind::kUnique) return;
        std::lock_guard<std::mutex> lock(found_mutex);
        found.push_back(std::move(outcome.circuit));
      });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::uint64_t RepetitionPolicy::Count(std::size_t live_size) const {
  const double m = static_cast<double>(live_size);
  switch (kind) {
    case Kind::kScaled:
      return std::max<std::uint64_t>(
          1, static_cast<std::uint64_t>(
                 std::ceil(factor * m * std::log(std::max(m, 2.0)))));
    case Kind::kLinear:
      return std::max<std::uint64_t>(
          1, static_cast<std::uint64_t>(std::ceil(factor * m)));
    case Kind::kFixed:
      return fixed;
  }
  return 1;
}

RepetitionPolicy RepetitionPolicy::Parse(const std::string& text) {
  RepetitionPolicy policy;
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      policy.kind = Kind::kFixed;
      policy.fixed = std::stoull(text);
    } else {
      const std::string name = text.substr(0, colon);
      const std::string value = text.substr(colon + 1);
      if (name == "scaled") {
        policy.kind = Kind::kScaled;
        policy.factor = std::stod(value);
      } else if (name == "linear") {
        policy.kind = Kind::kLinear;
        policy.factor = std::stod(value);
      } else if (name == "fixed") {
        policy.kind = Kind::kFixed;
        policy.fixed = std::stoull(value);
      } else {
        throw InputError("unknown repetition policy '" + name + "'");
      }
    }
  } catch (const std::logic_error&) {
    throw InputError("cannot parse repetition policy '" + text + "'");
  }
  if (policy.kind != Kind::kFixed && !(policy.factor > 0)) {
    throw InputError("repetition factor must be positive");
  }
  if (policy.kind == Kind::kFixed && policy.fixed == 0) {
    throw InputError("fixed repetition count must be >= 1");
  }
  return policy;
}

std::string RepetitionPolicy::ToString() const {
  switch (kind) {
    case Kind::kScaled:
      return "scaled:" + std::to_string(factor);
    case Kind::kLinear:
      return "linear:" + std::to_string(factor);
    case Kind::kFixed:
      return "fixed:" + std::to_string(fixed);
  }
  return "";
}

void IsolationConfig::Validate() const {
  if (!(sampling_exponent >= 0) || !std::isfinite(sampling_exponent)) {
    throw InputError("sampling exponent must be a finite value >= 0");
  }
  if (!(growth_factor > 1) || !std::isfinite(growth_factor)) {
    throw InputError("growth factor must be > 1");
  }
  if (repetitions.kind == RepetitionPolicy::Kind::kFixed &&
      repetitions.fixed == 0) {
    throw InputError("repetition count must be >= 1");
  }
}

double SamplingRate(std::size_t m, std::size_t girth, double exponent) {
  if (m == 0 || girth == 0) {
    throw InputError("sampling rate needs m >= 1 and ell >= 1");
  }
  if (!(exponent >= 0) || !std::isfinite(exponent)) {
    throw InputError("sampling exponent must be a finite value >= 0");
  }
  const double p = std::pow(static_cast<double>(m),
                            -exponent / static_cast<double>(girth));
  return std::min(1.0, p);
}

ElementSet DrawSample(const ElementSet& live, double rate, std::uint64_t seed,
                      std::uint64_t invocation, std::uint64_t index) {
  const BernoulliThreshold keep(rate);
  Rng rng(StreamKey(seed, invocation, index));
  std::vector<ElementId> kept;
  kept.reserve(static_cast<std::size_t>(rate * live.size()) + 8);
  for (ElementId e : live) {
    if (keep.Accept(rng())) kept.push_back(e);
  }
  return ElementSet::FromSorted(std::move(kept));
}

std::vector<Circuit> RecoverCircuitSuperset(QuerySession& session,
                                            const ElementSet& live,
                                            std::size_t girth,
                                            const IsolationConfig& config,
                                            std::uint64_t invocation,
                                            bool* live_independent) {
  config.Validate();
  const ElementSet* probe = live_independent != nullptr ? &live : nullptr;
  if (live.empty()) {
    return HarvestUniqueCircuits(
        session, 0, [](std::size_t) { return ElementSet(); }, probe,
        live_independent);
  }
  const std::uint64_t samples = config.repetitions.Count(live.size());
  const double rate =
      SamplingRate(live.size(), girth, config.sampling_exponent);
  return HarvestUniqueCircuits(
      session, samples,
      [&](std::size_t i) {
        return DrawSample(live, rate, config.rng_seed, invocation, i);
      },
      probe, live_independent);
}

std::vector<Circuit> RecoverWithPositionFamily(
    QuerySession& session, const ElementSet& live,
    const std::vector<ElementSet>& position_sets, bool* live_independent) {
  const ElementSet* probe = live_independent != nullptr ? &live : nullptr;
  return HarvestUniqueCircuits(session, position_sets.size(), [&](std::size_t i) {
    std::vector<ElementId> ids;
    ids.reserve(position_sets[i].size());
    for (ElementId pos : position_sets[i]) {
      if (pos >= live.size()) {
        throw InputError("isolating set position " + std::to_string(pos) +
                         " beyond live set of size " +
                         std::to_string(live.size()));
      }
      ids.push_back(live[pos]);
    }
    return ElementSet::FromSorted(std::move(ids));
  }, probe, live_independent);
}

double UniqueSurvivalProbability(const MatroidInstance& instance,
                                 const Circuit& target, double p) {
  const std::size_t m = instance.size();
  if (m > kMaxSurvivalElements) {
    throw CapacityError("exact survival probability is limited to " +
                        std::to_string(kMaxSurvivalElements) + " elements");
  }
  if (!(p >= 0 && p <= 1)) throw InputError("p must lie in [0, 1]");
  const CircuitCatalog catalog = EnumerateCircuits(instance);
  if (!catalog.Contains(target)) {
    throw InputError("target " + target.DebugString() +
                     " is not a circuit of the instance");
  }
  auto to_mask = [](const ElementSet& s) {
    std::uint32_t mask = 0;
    for (ElementId e : s) mask |= std::uint32_t{1} << e;
    return mask;
  };
  const std::uint32_t target_mask = to_mask(target);
  std::vector<std::uint32_t> others;
  for (const Circuit& c : catalog.circuits) {
    if (c != target) others.push_back(to_mask(c));
  }
  double total = 0;
  const std::uint32_t full = (m == 32) ? ~0u : ((std::uint32_t{1} << m) - 1);
  for (std::uint32_t kept = 0;; ++kept) {
    if ((kept & target_mask) == target_mask &&
        std::none_of(others.begin(), others.end(), [&](std::uint32_t c) {
          return (kept & c) == c;
        })) {
      const int size = std::popcount(kept);
      total += std::pow(p, size) * std::pow(1 - p, static_cast<int>(m) - size);
    }
    if (kept == full) break;
  }
  return total;
}

}  // namespace parbasis
