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


#include <cmath>

#include "doctest.h"
#include "oracles.h"
#include "parbasis/errors.h"
#include "parbasis/generators.h"
#include "parbasis/isolation.h"
#include "parbasis/random.h"
#include "parbasis/truth.h"

namespace parbasis {
namespace {

using testing::Mask;
using testing::MaskOf;
using testing::SetOf;

GraphicInstance TwoTriangles() {
  GraphicInstance g;
  g.num_vertices = 6;
  g.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  return g;
}

GraphicInstance Petersen() {
  GraphicInstance g;
  g.num_vertices = 10;
  for (std::uint32_t i = 0; i < 5; ++i) {
    g.edges.push_back({i, (i + 1) % 5});
    g.edges.push_back({i, i + 5});
    g.edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return g;
}

// Exact unique-survival probability straight from the definition.
double BruteSurvival(std::size_t m, const std::vector<Mask>& circuits,
                     Mask target, double p) {
  double total = 0;
  for (Mask kept = 0; kept < (Mask{1} << m); ++kept) {
    bool unique = (kept & target) == target;
    for (Mask c : circuits) {
      if (c != target && (kept & c) == c) unique = false;
    }
    if (!unique) continue;
    const int k = std::popcount(kept);
    total += std::pow(p, k) * std::pow(1 - p, static_cast<int>(m) - k);
  }
  return total;
}

// c1 that makes SamplingRate(m, ell, c1) == p.
double ExponentFor(double p, std::size_t m, std::size_t ell) {
  return -static_cast<double>(ell) * std::log(p) / std::log(static_cast<double>(m));
}

TEST_CASE("sampling rate examples") {
  CHECK(SamplingRate(10, 1, 1.0) == doctest::Approx(0.1));
  CHECK(SamplingRate(10, 2, 2.0) == doctest::Approx(0.1));
  CHECK(SamplingRate(16, 4, 2.0) == doctest::Approx(0.25));
  CHECK(SamplingRate(16, 4, 0.0) == 1.0);
  CHECK(SamplingRate(1, 3, 5.0) == 1.0);
  CHECK_THROWS_AS(SamplingRate(0, 1, 1.0), InputError);
  CHECK_THROWS_AS(SamplingRate(5, 0, 1.0), InputError);
  CHECK_THROWS_AS(SamplingRate(5, 1, -1.0), InputError);
}

TEST_CASE("repetition policies") {
  CHECK(RepetitionPolicy::Parse("fixed:200").Count(1000) == 200);
  CHECK(RepetitionPolicy::Parse("17").Count(3) == 17);
  CHECK(RepetitionPolicy::Parse("linear:2.5").Count(10) == 25);
  CHECK(RepetitionPolicy::Parse("scaled:64").Count(10) ==
        static_cast<std::uint64_t>(std::ceil(64 * 10 * std::log(10.0))));
  CHECK(RepetitionPolicy().Count(1) >= 1);
  CHECK(RepetitionPolicy::Parse(RepetitionPolicy::Parse("linear:3").ToString())
            .Count(7) == 21);
  CHECK_THROWS_AS(RepetitionPolicy::Parse("fixed:0"), InputError);
  CHECK_THROWS_AS(RepetitionPolicy::Parse("cubic:2"), InputError);
  CHECK_THROWS_AS(RepetitionPolicy::Parse("linear:-1"), InputError);
  CHECK_THROWS_AS(RepetitionPolicy::Parse("many"), InputError);
}

TEST_CASE("samples are pure functions of (seed, invocation, index)") {
  const ElementSet live = ElementSet::FromUnsorted({2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(DrawSample(live, 0.5, 1, 2, 3) == DrawSample(live, 0.5, 1, 2, 3));
  CHECK(DrawSample(live, 1.0, 1, 2, 3) == live);
  CHECK(DrawSample(live, 0.0, 1, 2, 3).empty());
  std::size_t kept = 0;
  for (std::uint64_t i = 0; i < 4000; ++i) {
    const ElementSet s = DrawSample(live, 0.3, 9, 0, i);
    REQUIRE(s.IsSubsetOf(live));
    kept += s.size();
  }
  CHECK(static_cast<double>(kept) / (4000 * 8) == doctest::Approx(0.3).epsilon(0.05));
  bool differs = false;
  for (std::uint64_t i = 0; i < 20 && !differs; ++i) {
    differs = DrawSample(live, 0.5, 1, 0, i) != DrawSample(live, 0.5, 1, 1, i);
  }
  CHECK(differs);
}

TEST_CASE("recover_circuit_superset examples") {
  IsolationConfig cfg;
  cfg.rng_seed = 5;

  const MatroidInstance forest(PathGraph(6));
  QuerySession fs(forest);
  CHECK(RecoverCircuitSuperset(fs, ElementSet::Range(5), 2, cfg, 0).empty());

  const MatroidInstance triangle(CycleGraph(3));
  QuerySession ts(triangle);
  IsolationConfig keep_all = cfg;
  keep_all.sampling_exponent = 0;
  keep_all.repetitions = RepetitionPolicy::Parse("fixed:1");
  const auto found = RecoverCircuitSuperset(ts, {0, 1, 2}, 2, keep_all, 0);
  CHECK(found == std::vector<Circuit>{{0, 1, 2}});

  const MatroidInstance two(TwoTriangles());
  QuerySession ws(two);
  IsolationConfig seventy = cfg;
  seventy.sampling_exponent = ExponentFor(0.7, 6, 2);
  seventy.repetitions = RepetitionPolicy::Parse("fixed:200");
  CHECK(SamplingRate(6, 2, seventy.sampling_exponent) == doctest::Approx(0.7));
  const auto both = RecoverCircuitSuperset(ws, ElementSet::Range(6), 2, seventy, 0);
  CHECK(both == std::vector<Circuit>{{0, 1, 2}, {3, 4, 5}});
}

TEST_CASE("one round, bounded queries, optional live probe") {
  const MatroidInstance k5(CompleteGraph(5));
  IsolationConfig cfg;
  cfg.rng_seed = 3;
  cfg.repetitions = RepetitionPolicy::Parse("fixed:50");
  const ElementSet live = ElementSet::Range(10);
  QuerySession session(k5);
  RecoverCircuitSuperset(session, live, 2, cfg, 0);
  CHECK(session.ledger().rounds() == 1);
  const double p = SamplingRate(10, 2, cfg.sampling_exponent);
  std::size_t largest = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    largest = std::max(largest, DrawSample(live, p, 3, 0, i).size());
  }
  CHECK(session.ledger().total_queries() <= 50 * (largest + 1));

  bool independent = true;
  RecoverCircuitSuperset(session, live, 2, cfg, 1, &independent);
  CHECK(session.ledger().rounds() == 2);
  CHECK_FALSE(independent);

  const MatroidInstance path(PathGraph(8));
  QuerySession ps(path);
  independent = false;
  RecoverCircuitSuperset(ps, ElementSet::Range(7), 2, cfg, 0, &independent);
  CHECK(independent);
}

TEST_CASE("position families name live elements") {
  const MatroidInstance two(TwoTriangles());
  QuerySession session(two);
  const ElementSet live{0, 1, 2, 3, 4, 5};
  const auto found = RecoverWithPositionFamily(
      session, live, {ElementSet{0, 1, 2}, ElementSet{0, 1, 2, 3, 4, 5},
                      ElementSet{3, 4, 5}});
  CHECK(found == std::vector<Circuit>{{0, 1, 2}, {3, 4, 5}});

  const ElementSet shifted{1, 2, 3};
  const MatroidInstance k4(CompleteGraph(4));
  QuerySession ks(k4);
  // K4 edges 1, 3 and 5 are (0,2), (1,2), (2,3): a star, no circuit.
  CHECK(RecoverWithPositionFamily(ks, ElementSet{1, 3, 5}, {ElementSet{0, 1, 2}})
            .empty());
  (void)shifted;
}

TEST_CASE("recovered circuits are genuine circuits") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const GraphicInstance g = RandomMultigraph(
        2 + static_cast<std::uint32_t>(rng.Below(6)), rng.Below(12), rng());
    const MatroidInstance inst(g);
    const auto truth = testing::BruteCircuits(g.edges.size(), testing::GraphIndFn(g));
    IsolationConfig cfg;
    cfg.rng_seed = rng();
    cfg.repetitions = RepetitionPolicy::Parse("fixed:100");
    QuerySession session(inst);
    for (const Circuit& c :
         RecoverCircuitSuperset(session, ElementSet::Range(g.edges.size()), 1, cfg, 0)) {
      CHECK(std::find(truth.begin(), truth.end(), MaskOf(c)) != truth.end());
    }
  }
}

TEST_CASE("unique survival probability examples") {
  const MatroidInstance triangle(CycleGraph(3));
  CHECK(UniqueSurvivalProbability(triangle, {0, 1, 2}, 0.5) == doctest::Approx(0.125));
  const MatroidInstance two(TwoTriangles());
  CHECK(UniqueSurvivalProbability(two, {0, 1, 2}, 0.5) == doctest::Approx(7.0 / 64));
  CHECK(UniqueSurvivalProbability(two, {3, 4, 5}, 0.7) ==
        doctest::Approx(0.343 * (1 - 0.343)));
  CHECK_THROWS_AS(UniqueSurvivalProbability(MatroidInstance(PathGraph(4)), {0, 1}, 0.5),
                  InputError);
  CHECK_THROWS_AS(UniqueSurvivalProbability(MatroidInstance(CycleGraph(21)),
                                            ElementSet::Range(21), 0.5),
                  CapacityError);
}

TEST_CASE("unique survival matches the brute-force definition") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const GraphicInstance g = RandomMultigraph(
        2 + static_cast<std::uint32_t>(rng.Below(4)), 1 + rng.Below(8), rng(), true);
    const std::size_t m = g.edges.size();
    const auto circuits = testing::BruteCircuits(m, testing::GraphIndFn(g));
    if (circuits.empty()) continue;
    const Mask target = circuits[rng.Below(circuits.size())];
    const double p = 0.1 + 0.8 * rng.Unit();
    CHECK(UniqueSurvivalProbability(MatroidInstance(g), SetOf(target), p) ==
          doctest::Approx(BruteSurvival(m, circuits, target, p)));
  }
}

// Calibrated R = ceil(ln(#targets / delta) / q) must miss some target in at
// most a delta fraction of seeded trials.
void CheckCompleteness(const GraphicInstance& g, std::size_t ell, double growth,
                       double c1) {
  const MatroidInstance inst(g);
  const std::size_t m = g.edges.size();
  const CircuitCatalog catalog = EnumerateCircuits(inst);
  REQUIRE(catalog.girth.has_value());
  REQUIRE(*catalog.girth > ell);
  const std::size_t top = static_cast<std::size_t>(std::floor(growth * ell));
  std::vector<Circuit> targets;
  const double p = SamplingRate(m, ell, c1);
  double q = 1.0;
  for (const Circuit& c : catalog.circuits) {
    if (c.size() <= top) {
      targets.push_back(c);
      q = std::min(q, UniqueSurvivalProbability(inst, c, p));
    }
  }
  REQUIRE(!targets.empty());
  const double delta = 0.05;
  IsolationConfig cfg;
  cfg.sampling_exponent = c1;
  cfg.growth_factor = growth;
  cfg.repetitions.kind = RepetitionPolicy::Kind::kFixed;
  cfg.repetitions.fixed = static_cast<std::uint64_t>(
      std::ceil(std::log(targets.size() / delta) / q));
  int failures = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    cfg.rng_seed = 1000 + t;
    QuerySession session(inst, {LedgerDetail::kSummary, std::nullopt});
    const auto found = RecoverCircuitSuperset(session, ElementSet::Range(m), ell, cfg, 0);
    for (const Circuit& c : targets) {
      if (!std::binary_search(found.begin(), found.end(), c)) {
        ++failures;
        break;
      }
    }
  }
  CHECK(failures <= delta * trials);
}

TEST_CASE("statistical completeness on K4") {
  CheckCompleteness(CompleteGraph(4), 2, 2.0, 0.5);
}

TEST_CASE("statistical completeness on the Petersen graph") {
  CheckCompleteness(Petersen(), 4, 1.5, 0.5);
}

}  // namespace
}  // namespace parbasis
