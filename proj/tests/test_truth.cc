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


#include "doctest.h"
#include "oracles.h"
#include "parbasis/errors.h"
#include "parbasis/generators.h"
#include "parbasis/random.h"
#include "parbasis/truth.h"

namespace parbasis {
namespace {

using testing::Mask;
using testing::MaskOf;

std::vector<Mask> Masks(const CircuitCatalog& catalog) {
  std::vector<Mask> out;
  for (const Circuit& c : catalog.circuits) out.push_back(MaskOf(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> Sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

GraphicInstance SharedEdgeTriangles() {
  GraphicInstance g;
  g.num_vertices = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  return g;
}

TEST_CASE("enumerate_circuits examples") {
  const CircuitCatalog c5 = EnumerateCircuits(MatroidInstance(CycleGraph(5)));
  CHECK(c5.circuits == std::vector<Circuit>{ElementSet::Range(5)});
  CHECK(c5.girth == 5);

  const GraphicInstance k4 = CompleteGraph(4);
  const CircuitCatalog cat = EnumerateCircuits(MatroidInstance(k4));
  CHECK(cat.circuits.size() == 7);
  CHECK(cat.girth == 3);
  CHECK(cat.CountUpTo(3) == 4);
  CHECK(Masks(cat) == Sorted(testing::BruteCircuits(6, testing::GraphIndFn(k4))));
  CHECK(Masks(EnumerateMinimalDependentSets(MatroidInstance(k4))) == Masks(cat));

  const CircuitCatalog forest = EnumerateCircuits(MatroidInstance(PathGraph(6)));
  CHECK(forest.circuits.empty());
  CHECK_FALSE(forest.girth.has_value());
}

TEST_CASE("catalog is sorted by size then ids") {
  const CircuitCatalog cat = EnumerateCircuits(MatroidInstance(CompleteGraph(5)));
  for (std::size_t i = 1; i < cat.circuits.size(); ++i) {
    const Circuit& a = cat.circuits[i - 1];
    const Circuit& b = cat.circuits[i];
    CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
  }
  CHECK(cat.Contains({0, 1, 4}));
  CHECK_FALSE(cat.Contains({0, 1}));
}

TEST_CASE("both enumeration paths agree with brute force") {
  Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const GraphicInstance g = RandomMultigraph(
        2 + static_cast<std::uint32_t>(rng.Below(5)), rng.Below(12), rng(),
        trial % 3 == 0);
    const MatroidInstance graphic(g);
    const auto truth = Sorted(testing::BruteCircuits(g.edges.size(), testing::GraphIndFn(g)));
    const CircuitCatalog cycles = EnumerateGraphCycles(g);
    CHECK(Masks(cycles) == truth);
    CHECK(Masks(EnumerateMinimalDependentSets(graphic)) == truth);
    CHECK(Masks(EnumerateMinimalDependentSets(
              MatroidInstance(IncidenceRealization(g)))) == truth);
  }
}

TEST_CASE("oracle consistency: dependent iff a circuit is contained") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const MatroidInstance binary(RandomBinary(1 + rng.Below(12), 1 + rng.Below(6),
                                              0.4, rng()));
    const std::size_t m = binary.size();
    const auto circuits = Masks(EnumerateCircuits(binary));
    for (Mask s = 0; s < (Mask{1} << m); ++s) {
      bool contains = false;
      for (Mask c : circuits) contains = contains || (c & s) == c;
      REQUIRE(binary.IsIndependent(testing::SetOf(s)) == !contains);
    }
  }
}

TEST_CASE("cographic circuits are the minimal cuts") {
  const GraphicInstance k4 = CompleteGraph(4);
  const MatroidInstance dual(CographicInstance{k4});
  const CircuitCatalog cat = EnumerateCircuits(dual);
  // K4 bonds: 4 vertex stars of size 3 and 3 four-edge cuts.
  CHECK(cat.circuits.size() == 7);
  CHECK(cat.girth == 3);
}

TEST_CASE("capacity limits") {
  CHECK_THROWS_AS(EnumerateMinimalDependentSets(MatroidInstance(CycleGraph(23))),
                  CapacityError);
  CHECK_THROWS_AS(EnumerateGraphCycles(CompleteGraph(9)), CapacityError);
  CHECK_NOTHROW(EnumerateGraphCycles(CompleteGraph(7)));
}

TEST_CASE("counting bound examples") {
  const CircuitCatalog k4 = EnumerateCircuits(MatroidInstance(CompleteGraph(4)));
  CHECK(CheckCountingBound(k4, 6, 1));
  CHECK(CheckCountingBound(k4, 6, 2));
  const CircuitCatalog c5 = EnumerateCircuits(MatroidInstance(CycleGraph(5)));
  CHECK(CheckCountingBound(c5, 5, 1));
  CHECK_THROWS_AS(CheckCountingBound(c5, 5, 0), InputError);
  CHECK_THROWS_AS(CheckCountingBound(CircuitCatalog{}, 5, 1), InputError);
  // 12 parallel copies of one edge: 66 circuits of size 2 against 24^2.
  GraphicInstance bundle;
  bundle.num_vertices = 2;
  for (int i = 0; i < 12; ++i) bundle.edges.push_back({0, 1});
  const CircuitCatalog b = EnumerateCircuits(MatroidInstance(bundle));
  CHECK(b.circuits.size() == 66);
  CHECK(CheckCountingBound(b, 12, 1));
}

TEST_CASE("overlap lemma examples") {
  GraphicInstance two;
  two.num_vertices = 6;
  two.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  CHECK(CheckOverlapLemma(EnumerateCircuits(MatroidInstance(two))));
  CHECK(CheckOverlapLemma(EnumerateCircuits(MatroidInstance(CompleteGraph(4)))));
  CHECK(CheckOverlapLemma(EnumerateCircuits(MatroidInstance(CycleGraph(5)))));
  CHECK(CheckOverlapLemma(CircuitCatalog{}));
}

TEST_CASE("overlap lemma holds on random graphs") {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const GraphicInstance g = RandomMultigraph(
        2 + static_cast<std::uint32_t>(rng.Below(6)), rng.Below(13), rng());
    CHECK(CheckOverlapLemma(EnumerateCircuits(MatroidInstance(g))));
  }
}

TEST_CASE("xor closure examples") {
  const GraphicInstance shared = SharedEdgeTriangles();
  const MatroidInstance inst(shared);
  const CircuitCatalog cat = EnumerateCircuits(inst);
  CHECK(cat.circuits.size() == 3);
  CHECK(cat.Contains({0, 1, 2, 3}));
  CHECK(CheckXorClosure(cat, inst));

  GraphicInstance two;
  two.num_vertices = 6;
  two.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  const MatroidInstance disjoint(two);
  CHECK(CheckXorClosure(EnumerateCircuits(disjoint), disjoint));

  const MatroidInstance c5(CycleGraph(5));
  CHECK(CheckXorClosure(EnumerateCircuits(c5), c5));
}

TEST_CASE("xor closure on random binary matroids") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const MatroidInstance binary(RandomBinary(2 + rng.Below(11), 1 + rng.Below(6),
                                              0.5, rng()));
    CHECK(CheckXorClosure(EnumerateCircuits(binary), binary));
  }
}

}  // namespace
}  // namespace parbasis
