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


#include "parbasis/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "parbasis/detect.h"
#include "parbasis/errors.h"

namespace parbasis {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Writes into `out` the combination of rank `rank` (lexicographic) among the
// size-`k` subsets of {0..n-1}.
void UnrankCombination(std::size_t n, std::size_t k, std::uint64_t rank,
                       std::vector<std::size_t>& out) {
  out.resize(k);
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t with_x = Binomial(n - x - 1, k - i - 1);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    out[i] = x++;
  }
}

// Advances to the lexicographic successor; false past the last one.
bool NextCombination(std::size_t n, std::vector<std::size_t>& c) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// The enumeration round, optionally carrying Ind(live) as a trailing block.
std::vector<Circuit> EnumerationRound(QuerySession& session,
                                      const ElementSet& live,
                                      std::size_t max_size,
                                      std::uint64_t budget, bool* probe) {
  const std::size_t n = live.size();
  max_size = std::min(max_size, n);
  // offsets[s] = number of subsets of size < s, sizes starting at 1.
  std::vector<std::uint64_t> offsets(max_size + 2, 0);
  for (std::size_t s = 1; s <= max_size; ++s) {
    offsets[s + 1] = SaturatingAdd(offsets[s], Binomial(n, s));
  }
  const std::uint64_t subsets = offsets[max_size + 1];
  if (subsets > budget) {
    throw CapacityError("enumerating " + std::to_string(subsets) +
                        " subsets exceeds the budget of " +
                        std::to_string(budget));
  }
  const auto count = static_cast<std::size_t>(subsets);
  const std::size_t blocks = count + (probe != nullptr ? 1 : 0);

  std::vector<Circuit> found;
  std::mutex found_mutex;
  session.RunRound(
      blocks,
      [&](std::size_t begin, std::size_t end,
          const QuerySession::BlockEmitter& emit) {
        std::size_t stop = std::min(end, count);
        if (begin < stop) {
          std::size_t size = 1;
          while (offsets[size + 1] <= begin) ++size;
          std::vector<std::size_t> positions;
          UnrankCombination(n, size, begin - offsets[size], positions);
          std::vector<ElementId> ids;
          for (std::size_t i = begin; i < stop; ++i) {
            ids.clear();
            for (std::size_t p : positions) ids.push_back(live[p]);
            emit(QueryBlock{ElementSet::FromSorted(ids),
                            QueryShape::kLeaveOneOut});
            if (!NextCombination(n, positions)) {
              ++size;
              positions.resize(size);
              for (std::size_t j = 0; j < size; ++j) positions[j] = j;
            }
          }
        }
        if (end > count && begin <= count) {
          emit(QueryBlock{live, QueryShape::kSingle});
        }
      },
      [&](std::size_t i, const QueryBlock& block, const BlockAnswers& answers) {
        if (i == count) {
          *probe = answers.whole;
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

// Greedy scan over `live` in id order, batched: a round asks
// Ind(current + next k elements) for every k, keeps the longest independent
// run and rejects the element after it. Same output as scanning one element
// per round, and never more rounds than elements.
ElementSet GreedyScan(QuerySession& session, const ElementSet& live,
                      std::size_t& rounds) {
  std::vector<ElementId> current;
  std::size_t next = 0;
  while (next < live.size()) {
    const std::size_t remaining = live.size() - next;
    std::vector<QueryBlock> blocks;
    blocks.reserve(remaining);
    std::vector<ElementId> grown = current;
    for (std::size_t k = 0; k < remaining; ++k) {
      grown.push_back(live[next + k]);
      blocks.push_back({ElementSet::FromUnsorted(grown), QueryShape::kSingle});
    }
    const std::vector<BlockAnswers> answers = session.Submit(std::move(blocks));
    ++rounds;
    std::size_t run = 0;
    while (run < remaining && answers[run].whole) ++run;
    for (std::size_t k = 0; k < run; ++k) current.push_back(live[next + k]);
    // live[next + run], if any, depends on what is kept.
    next += run + 1;
  }
  return ElementSet::FromUnsorted(std::move(current));
}

}  // namespace

void SolverConfig::Validate() const {
  if (initial_girth < 2) {
    throw InputError("initial girth must be at least 2");
  }
  if (enumeration_budget == 0) {
    throw InputError("enumeration budget must be positive");
  }
  isolation.Validate();
}

std::size_t NextGirth(std::size_t girth, double growth) {
  const long double grown =
      std::floor(static_cast<long double>(growth) * girth + 1e-9L);
  const auto floored = static_cast<std::size_t>(grown);
  return std::max(girth + 1, floored);
}

std::uint64_t SubsetCountUpTo(std::size_t n, std::size_t max_size) {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    total = SaturatingAdd(total, Binomial(n, k));
  }
  return total;
}

std::size_t EffectiveInitialGirth(std::size_t live_size,
                                  const SolverConfig& config) {
  const std::size_t wanted = config.initial_girth;
  if (SubsetCountUpTo(live_size, wanted) <= config.enumeration_budget) {
    return wanted;
  }
  if (!config.clamp_initial_girth) {
    throw CapacityError("initial girth " + std::to_string(wanted) +
                        " needs " +
                        std::to_string(SubsetCountUpTo(live_size, wanted)) +
                        " subsets; budget is " +
                        std::to_string(config.enumeration_budget));
  }
  for (std::size_t g = wanted - 1; g >= 1; --g) {
    if (SubsetCountUpTo(live_size, g) <= config.enumeration_budget) return g;
  }
  throw CapacityError("enumeration budget admits no initial girth");
}

std::vector<Circuit> EnumerateShortCircuits(QuerySession& session,
                                            const ElementSet& live,
                                            std::size_t max_size,
                                            std::uint64_t budget) {
  return EnumerationRound(session, live, max_size, budget, nullptr);
}

Deletion DeleteLargestIndexed(const ElementSet& live,
                              const std::vector<Circuit>& circuits) {
  std::vector<ElementId> doomed;
  doomed.reserve(circuits.size());
  for (const Circuit& c : circuits) {
    if (c.empty()) throw InputError("empty circuit");
    if (!c.IsSubsetOf(live)) {
      throw InputError("circuit " + c.DebugString() + " is not in the live set");
    }
    doomed.push_back(c.back());
  }
  Deletion result;
  result.deleted = ElementSet::FromUnsorted(std::move(doomed));
  result.live = Difference(live, result.deleted);
  return result;
}

SolveReport RunSolver(QuerySession& session, const SolverConfig& config) {
  config.Validate();
  SolveReport report;
  report.seed = config.isolation.rng_seed;
  const bool probe = config.probe_live_independence;
  ElementSet live = ElementSet::Range(session.ground_size());

  const std::size_t g0 = EffectiveInitialGirth(live.size(), config);
  report.initial_girth = g0;
  bool independent = false;
  std::vector<Circuit> circuits = EnumerationRound(
      session, live, g0, config.enumeration_budget, probe ? &independent : nullptr);
  bool done = independent;
  if (!done) {
    Deletion cut = DeleteLargestIndexed(live, circuits);
    live = std::move(cut.live);
    report.deleted_trace.push_back(std::move(cut.deleted));
  }

  std::size_t girth = g0;
  std::uint64_t invocation = 0;
  bool fallback = false;
  while (!done && live.size() >= girth) {
    if (live.size() <= config.small_fallback_threshold) {
      fallback = true;
      break;
    }
    independent = false;
    bool* probe_slot = probe ? &independent : nullptr;
    if (config.families != nullptr) {
      const std::vector<ElementSet> positions = config.families->PositionSets(
          live.size(), girth, config.isolation.growth_factor);
      circuits = RecoverWithPositionFamily(session, live, positions, probe_slot);
    } else {
      circuits = RecoverCircuitSuperset(session, live, girth, config.isolation,
                                        invocation, probe_slot);
    }
    ++invocation;
    report.girth_trace.push_back(girth);
    if (independent) {
      done = true;
      break;
    }
    Deletion cut = DeleteLargestIndexed(live, circuits);
    live = std::move(cut.live);
    report.deleted_trace.push_back(std::move(cut.deleted));
    girth = NextGirth(girth, config.isolation.growth_factor);
  }

  if (fallback) {
    live = GreedyScan(session, live, report.greedy_rounds);
  }
  report.basis = std::move(live);
  const QueryLedger& ledger = session.ledger();
  report.rounds = ledger.rounds();
  report.max_queries_per_round = ledger.max_queries_per_round();
  report.total_queries = ledger.total_queries();
  return report;
}

bool VerifyBasis(const MatroidInstance& instance, const ElementSet& basis) {
  if (!basis.empty() && basis.back() >= instance.size()) return false;
  return basis.size() == instance.Rank() && instance.IsIndependent(basis);
}

SolveResult FindBasis(const MatroidInstance& instance,
                      const SolverConfig& config,
                      LedgerOptions ledger_options) {
  QuerySession session(instance, ledger_options);
  SolveReport report = RunSolver(session, config);
  report.success = VerifyBasis(instance, report.basis);
  if (!report.success) {
    if (!instance.IsIndependent(report.basis)) {
      report.failure = "output contains a circuit (isolation missed one)";
    } else {
      report.failure = "output is independent but has size " +
                       std::to_string(report.basis.size()) + ", rank is " +
                       std::to_string(instance.Rank());
    }
  }
  return SolveResult{std::move(report), session.ledger()};
}

SolveResult FindBasisWithRetries(const MatroidInstance& instance,
                                 SolverConfig config, unsigned retries,
                                 LedgerOptions ledger_options) {
  const std::uint64_t base_seed = config.isolation.rng_seed;
  SolveResult result = FindBasis(instance, config, ledger_options);
  unsigned attempt = 1;
  while (!result.report.success && attempt <= retries) {
    config.isolation.rng_seed = base_seed + attempt;
    result = FindBasis(instance, config, ledger_options);
    ++attempt;
  }
  result.report.attempts = attempt;
  return result;
}

nlohmann::json ReportToJson(const SolveReport& report) {
  nlohmann::json deleted = nlohmann::json::array();
  for (const ElementSet& d : report.deleted_trace) deleted.push_back(d.ids());
  return {
      {"basis", report.basis.ids()},
      {"success", report.success},
      {"failure", report.failure},
      {"rounds", report.rounds},
      {"max_queries_per_round", report.max_queries_per_round},
      {"total_queries", report.total_queries},
      {"initial_girth", report.initial_girth},
      {"girth_trace", report.girth_trace},
      {"deleted_trace", deleted},
      {"greedy_rounds", report.greedy_rounds},
      {"attempts", report.attempts},
      {"seed", report.seed},
  };
}

SolveReport ReportFromJson(const nlohmann::json& json) {
  SolveReport report;
  try {
    report.basis = ElementSet::FromUnsorted(
        json.at("basis").get<std::vector<ElementId>>());
    report.success = json.at("success").get<bool>();
    report.failure = json.value("failure", std::string());
    report.rounds = json.at("rounds").get<std::size_t>();
    report.max_queries_per_round =
        json.at("max_queries_per_round").get<std::uint64_t>();
    report.total_queries = json.at("total_queries").get<std::uint64_t>();
    report.initial_girth = json.value("initial_girth", std::size_t{0});
    report.girth_trace =
        json.value("girth_trace", std::vector<std::size_t>());
    for (const auto& d : json.value("deleted_trace", nlohmann::json::array())) {
      report.deleted_trace.push_back(
          ElementSet::FromUnsorted(d.get<std::vector<ElementId>>()));
    }
    report.greedy_rounds = json.value("greedy_rounds", std::size_t{0});
    report.attempts = json.value("attempts", 1u);
    report.seed = json.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return report;
}

}  // namespace parbasis
