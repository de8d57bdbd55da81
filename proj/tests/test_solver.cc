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
#include "parbasis/random.h"
#include "parbasis/solver.h"

namespace parbasis {
namespace {

using testing::Mask;
using testing::MaskOf;

GraphicInstance TriangleAndEdge() {
  GraphicInstance g;
  g.num_vertices = 5;
  g.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}};
  return g;
}

SolverConfig Seeded(std::uint64_t seed) {
  SolverConfig cfg;
  cfg.isolation.rng_seed = seed;
  return cfg;
}

TEST_CASE("enumerate_short_circuits examples") {
  const MatroidInstance te(TriangleAndEdge());
  QuerySession s1(te);
  CHECK(EnumerateShortCircuits(s1, ElementSet::Range(4), 3, 1000) ==
        std::vector<Circuit>{{0, 1, 2}});
  CHECK(s1.ledger().rounds() == 1);

  const MatroidInstance c5(CycleGraph(5));
  QuerySession s2(c5);
  CHECK(EnumerateShortCircuits(s2, ElementSet::Range(5), 3, 1000).empty());

  const GraphicInstance k4 = CompleteGraph(4);
  const MatroidInstance mk4(k4);
  QuerySession s3(mk4);
  const auto found = EnumerateShortCircuits(s3, ElementSet::Range(6), 3, 1000);
  std::vector<Mask> expected;
  for (Mask c : testing::BruteCircuits(6, testing::GraphIndFn(k4))) {
    if (std::popcount(c) <= 3) expected.push_back(c);
  }
  REQUIRE(expected.size() == 4);
  REQUIRE(found.size() == 4);
  for (const Circuit& c : found) {
    CHECK(std::find(expected.begin(), expected.end(), MaskOf(c)) != expected.end());
  }
}

TEST_CASE("enumeration respects the work budget") {
  const MatroidInstance k5(CompleteGraph(5));
  QuerySession session(k5);
  CHECK(SubsetCountUpTo(10, 3) == 10 + 45 + 120);
  CHECK(SubsetCountUpTo(10, 0) == 0);
  CHECK_THROWS_AS(EnumerateShortCircuits(session, ElementSet::Range(10), 3, 174),
                  CapacityError);
  CHECK(session.ledger().rounds() == 0);
  CHECK_NOTHROW(EnumerateShortCircuits(session, ElementSet::Range(10), 3, 175));
}

TEST_CASE("effective initial girth") {
  SolverConfig cfg;
  cfg.initial_girth = 4;
  cfg.enumeration_budget = 1'000'000;
    CHECK(EffectiveInitialGirth(50, cfg) == 4);
  CHECK(SolverConfig().enumeration_budget == 10'000'000);
  CHECK(EffectiveInitialGirth(200, cfg) == 2);
  CHECK(EffectiveInitialGirth(3, cfg) == 4);
  cfg.clamp_initial_girth = false;
  CHECK_THROWS_AS(EffectiveInitialGirth(200, cfg), CapacityError);
  cfg.clamp_initial_girth = true;
  cfg.enumeration_budget = 1;
  CHECK_THROWS_AS(EffectiveInitialGirth(200, cfg), CapacityError);
}

TEST_CASE("delete_largest_indexed examples") {
  Deletion d = DeleteLargestIndexed({0, 1, 2}, {{0, 1, 2}});
  CHECK(d.deleted == ElementSet{2});
  CHECK(d.live == ElementSet{0, 1});

  d = DeleteLargestIndexed(ElementSet::Range(6), {{0, 1, 2}, {3, 4, 5}});
  CHECK(d.deleted == ElementSet{2, 5});

  // Two triangles glued along edge 4.
  GraphicInstance g;
  g.num_vertices = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  const MatroidInstance inst(g);
  REQUIRE_FALSE(inst.IsIndependent({0, 1, 4}));
  REQUIRE_FALSE(inst.IsIndependent({2, 3, 4}));
  d = DeleteLargestIndexed(ElementSet::Range(5), {{0, 1, 4}, {2, 3, 4}});
  CHECK(d.deleted == ElementSet{4});
  CHECK(d.live == ElementSet{0, 1, 2, 3});
  CHECK_FALSE(inst.IsIndependent(d.live));
  CHECK(testing::BruteGraphRank(g, MaskOf(d.live)) ==
        testing::BruteGraphRank(g, MaskOf(ElementSet::Range(5))));

  CHECK_THROWS_AS(DeleteLargestIndexed({0, 1}, {Circuit{}}), InputError);
  CHECK_THROWS_AS(DeleteLargestIndexed({0, 1}, {{0, 1, 2}}), InputError);
}

TEST_CASE("verify_basis examples") {
  const MatroidInstance triangle(CycleGraph(3));
  CHECK(VerifyBasis(triangle, {0, 1}));
  CHECK_FALSE(VerifyBasis(triangle, {0, 1, 2}));
  CHECK_FALSE(VerifyBasis(triangle, {0}));
  CHECK_FALSE(VerifyBasis(triangle, {0, 7}));
}

TEST_CASE("find_basis examples") {
  const MatroidInstance forest(PathGraph(9));
  SolveResult r = FindBasis(forest, Seeded(1));
  CHECK(r.report.success);
  CHECK(r.report.basis == ElementSet::Range(8));
  CHECK(r.report.rounds == 1);

  for (std::uint32_t n : {3u, 4u}) {
    const MatroidInstance cycle(CycleGraph(n));
    r = FindBasis(cycle, Seeded(2));
    CHECK(r.report.success);
    CHECK(r.report.basis == ElementSet::Range(n - 1));
  }

  const GraphicInstance k4 = CompleteGraph(4);
  r = FindBasis(MatroidInstance(k4), Seeded(3));
  CHECK(r.report.success);
  CHECK(r.report.basis.size() == 3);
  CHECK(testing::BruteForest(k4, MaskOf(r.report.basis)));
  CHECK(r.report.rounds == r.ledger.rounds());
  CHECK(r.report.total_queries == r.ledger.total_queries());
}

TEST_CASE("floor growth arithmetic") {
  for (std::uint64_t k = 100; k <= 1'000'000; ++k) {
    // floor(1.01 k) computed exactly in integers.
    const std::uint64_t grown = (101 * k) / 100;
    REQUIRE(200 * grown >= 201 * k);
  }
  CHECK(NextGirth(2, 1.01) == 3);
  CHECK(NextGirth(100, 1.01) == 101);
  CHECK(NextGirth(1000, 1.01) == 1010);
  CHECK(NextGirth(3, 2.0) == 6);
  CHECK(NextGirth(4, 1.5) == 6);
  for (std::size_t k = 1; k < 5000; ++k) {
    REQUIRE(NextGirth(k, 1.01) ==
            std::max<std::size_t>(k + 1, static_cast<std::size_t>((101 * k) / 100)));
  }
}

// Replays the deletion trace and checks, after every step, that rank and the
// component partition are unchanged and that no circuit at or below the
// step's threshold survives.
void CheckTrace(const GraphicInstance& g, const SolveReport& report) {
  const std::size_t m = g.edges.size();
  const auto circuits = testing::BruteCircuits(m, testing::GraphIndFn(g));
  const Mask all = (Mask{1} << m) - 1;
  const std::size_t rank = testing::BruteGraphRank(g, all);
  const auto labels = ComponentLabels(g, ElementSet::Range(m));
  Mask live = all;
  std::vector<std::size_t> thresholds{report.initial_girth};
  thresholds.insert(thresholds.end(), report.girth_trace.begin(),
                    report.girth_trace.end());
  REQUIRE(report.deleted_trace.size() <= thresholds.size());
  for (std::size_t step = 0; step < report.deleted_trace.size(); ++step) {
    live &= ~MaskOf(report.deleted_trace[step]);
    CHECK(testing::BruteGraphRank(g, live) == rank);
    CHECK(ComponentLabels(g, testing::SetOf(live)) == labels);
    for (Mask c : circuits) {
      if ((c & live) == c) {
        CHECK(static_cast<std::size_t>(std::popcount(c)) > thresholds[step]);
      }
    }
  }
}

TEST_CASE("rank preservation and girth monotonicity") {
  Rng rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const GraphicInstance g = RandomMultigraph(
        2 + static_cast<std::uint32_t>(rng.Below(6)), 4 + rng.Below(11), rng());
    SolverConfig cfg = Seeded(rng());
    cfg.initial_girth = 2;
    cfg.small_fallback_threshold = 0;
    cfg.probe_live_independence = trial % 2 == 0;
    cfg.isolation.repetitions = RepetitionPolicy::Parse("fixed:300");
    const SolveResult r = FindBasis(MatroidInstance(g), cfg);
    CHECK(r.report.success);
    CHECK(r.report.greedy_rounds == 0);
    CheckTrace(g, r.report);
    for (std::size_t i = 1; i < r.report.girth_trace.size(); ++i) {
      CHECK(r.report.girth_trace[i] ==
            NextGirth(r.report.girth_trace[i - 1], cfg.isolation.growth_factor));
    }
  }
}

TEST_CASE("exact on all three matroid classes") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const GraphicInstance g =
        RandomMultigraph(3 + static_cast<std::uint32_t>(rng.Below(20)),
                         5 + rng.Below(60), rng());
    SolverConfig cfg = Seeded(trial);
    cfg.isolation.repetitions = RepetitionPolicy::Parse("linear:16");
    const MatroidInstance graphic(g);
    SolveResult r = FindBasis(graphic, cfg);
    CHECK(r.report.success);
    CHECK(ComponentLabels(g, r.report.basis) == ComponentLabels(g, ElementSet::Range(g.edges.size())));

    const MatroidInstance cographic(CographicInstance{g});
    r = FindBasis(cographic, cfg);
    CHECK(r.report.success);
    CHECK(r.report.basis.size() == g.edges.size() - graphic.Rank());

    const MatroidInstance binary(RandomBinary(5 + rng.Below(40),
                                              1 + rng.Below(12), 0.3, rng()));
    r = FindBasis(binary, cfg);
    CHECK(r.report.success);
    CHECK(VerifyBasis(binary, r.report.basis));
  }
}

TEST_CASE("greedy fallback finishes small live sets") {
  const MatroidInstance k4(CompleteGraph(4));
  SolverConfig cfg = Seeded(4);
  cfg.initial_girth = 2;
  cfg.small_fallback_threshold = 12;
  const SolveResult r = FindBasis(k4, cfg);
  CHECK(r.report.success);
  CHECK(r.report.greedy_rounds >= 1);
  CHECK(r.report.girth_trace.empty());
}

TEST_CASE("isolation failure is reported, retries change the seed") {
  // One unsampled repetition at rate ~0 finds nothing; the scan is disabled.
  const MatroidInstance k4(CompleteGraph(4));
  SolverConfig cfg = Seeded(0);
  cfg.initial_girth = 2;
  cfg.small_fallback_threshold = 0;
  cfg.isolation.sampling_exponent = 1000;
  cfg.isolation.repetitions = RepetitionPolicy::Parse("fixed:1");
  SolveResult r = FindBasis(k4, cfg);
  CHECK_FALSE(r.report.success);
  CHECK_FALSE(r.report.failure.empty());

  r = FindBasisWithRetries(k4, cfg, 3);
  CHECK_FALSE(r.report.success);
  CHECK(r.report.attempts == 4);
  CHECK(r.report.seed == 3);

  cfg.isolation.sampling_exponent = 0.5;
  cfg.isolation.repetitions = RepetitionPolicy::Parse("fixed:200");
  r = FindBasisWithRetries(k4, cfg, 3);
  CHECK(r.report.success);
  CHECK(r.report.attempts == 1);
}

TEST_CASE("runs are deterministic in the seed") {
  const MatroidInstance inst(RandomMultigraph(16, 36, 8));
  const SolveResult a = FindBasis(inst, Seeded(11));
  const SolveResult b = FindBasis(inst, Seeded(11));
  CHECK(a.report.basis == b.report.basis);
  CHECK(LedgerToJson(a.ledger) == LedgerToJson(b.ledger));
}

TEST_CASE("report json round trip") {
  const SolveResult r = FindBasis(MatroidInstance(CompleteGraph(6)), Seeded(9));
  const SolveReport back = ReportFromJson(ReportToJson(r.report));
  CHECK(ReportToJson(back) == ReportToJson(r.report));
  CHECK_THROWS_AS(ReportFromJson(nlohmann::json::array()), InputError);
  CHECK_THROWS_AS(ReportFromJson(nlohmann::json{{"basis", "x"}}), InputError);
}

TEST_CASE("config validation") {
  SolverConfig cfg;
  cfg.initial_girth = 1;
  CHECK_THROWS_AS(cfg.Validate(), InputError);
  cfg.initial_girth = 4;
  cfg.enumeration_budget = 0;
  CHECK_THROWS_AS(cfg.Validate(), InputError);
}

}  // namespace
}  // namespace parbasis
