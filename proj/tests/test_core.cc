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


#include <atomic>
#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.h"
#include "parbasis/element_set.h"
#include "parbasis/errors.h"
#include "parbasis/gf2.h"
#include "parbasis/parallel.h"
#include "parbasis/random.h"
#include "parbasis/union_find.h"

namespace parbasis {
namespace {

TEST_CASE("element sets stay sorted and unique") {
  const ElementSet s = ElementSet::FromUnsorted({5, 1, 3, 1, 5});
  CHECK(s.ids() == std::vector<ElementId>{1, 3, 5});
  CHECK(s.Contains(3));
  CHECK_FALSE(s.Contains(2));
  CHECK(s.With(2).ids() == std::vector<ElementId>{1, 2, 3, 5});
  CHECK(s.With(3) == s);
  CHECK(s.Without(1).ids() == std::vector<ElementId>{3, 5});
  CHECK(s.Without(4) == s);
  CHECK(ElementSet::Range(3) == ElementSet{0, 1, 2});
  CHECK(ElementSet{1, 3}.IsSubsetOf(s));
  CHECK_FALSE(ElementSet{1, 2}.IsSubsetOf(s));
  CHECK(ElementSet().IsSubsetOf(s));
  CHECK(s.DebugString() == "{1,3,5}");
}

TEST_CASE("set algebra matches bit masks") {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const testing::Mask a = rng() & 0xffff;
    const testing::Mask b = rng() & 0xffff;
    const ElementSet sa = testing::SetOf(a);
    const ElementSet sb = testing::SetOf(b);
    CHECK(testing::MaskOf(Union(sa, sb)) == (a | b));
    CHECK(testing::MaskOf(Intersection(sa, sb)) == (a & b));
    CHECK(testing::MaskOf(Difference(sa, sb)) == (a & ~b));
    CHECK(testing::MaskOf(SymmetricDifference(sa, sb)) == (a ^ b));
    CHECK(DifferenceSize(sa, sb) ==
          static_cast<std::size_t>(std::popcount(a & ~b)));
    CHECK((sa < sb) == (sa.ids() < sb.ids()));
  }
}

TEST_CASE("stream keys are pure and distinct") {
  CHECK(StreamKey(1, 2, 3) == StreamKey(1, 2, 3));
  std::set<std::uint64_t> keys;
  for (std::uint64_t a = 0; a < 20; ++a) {
    for (std::uint64_t b = 0; b < 20; ++b) keys.insert(StreamKey(7, a, b));
  }
  CHECK(keys.size() == 400);
  CHECK(StreamKey(7, 1, 2) != StreamKey(7, 2, 1));
}

TEST_CASE("Below is in range and roughly uniform") {
  Rng rng(3);
  std::map<std::uint64_t, int> counts;
  for (int i = 0; i < 60000; ++i) {
    const std::uint64_t x = rng.Below(6);
    REQUIRE(x < 6);
    ++counts[x];
  }
  for (const auto& [value, count] : counts) CHECK(std::abs(count - 10000) < 500);
  CHECK(rng.Below(1) == 0);
}

TEST_CASE("Unit lies in [0, 1) and Bernoulli thresholds honor p") {
  Rng rng(5);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.Unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));

  const BernoulliThreshold always(1.0);
  const BernoulliThreshold never(0.0);
  const BernoulliThreshold third(1.0 / 3);
  int hits = 0;
  for (int i = 0; i < 30000; ++i) {
    const std::uint64_t draw = rng();
    CHECK(always.Accept(draw));
    CHECK_FALSE(never.Accept(draw));
    hits += third.Accept(draw);
  }
  CHECK(std::abs(hits - 10000) < 400);
}

TEST_CASE("shuffle is a permutation") {
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  Rng rng(11);
  rng.Shuffle(v);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) CHECK(sorted[i] == i);
}

TEST_CASE("stamped union-find resets in O(1)") {
  StampedUnionFind dsu(6);
  CHECK(dsu.Union(0, 1));
  CHECK(dsu.Union(1, 2));
  CHECK_FALSE(dsu.Union(0, 2));
  dsu.Reset();
  CHECK(dsu.Union(0, 2));
  CHECK(dsu.Find(1) == 1);
  for (int i = 0; i < 1000; ++i) dsu.Reset();
  CHECK(dsu.Union(4, 5));
}

TEST_CASE("gf2 hex round trip") {
  Gf2Vector v(10);
  v.Set(0, true);
  v.Set(9, true);
  CHECK(v.ToHex() == "201");
  CHECK(Gf2Vector::FromHex("201", 10) == v);
  CHECK(Gf2Vector(3).ToHex() == "0");
  CHECK(Gf2Vector(0).ToHex() == "0");
  CHECK_THROWS_AS(Gf2Vector::FromHex("8", 3), InputError);
  CHECK_THROWS_AS(Gf2Vector::FromHex("g", 4), InputError);
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + rng.Below(150);
    Gf2Vector w(dim);
    for (std::size_t i = 0; i < dim; ++i) w.Set(i, rng() & 1u);
    CHECK(Gf2Vector::FromHex(w.ToHex(), dim) == w);
  }
}

TEST_CASE("gf2 rank agrees with plain elimination") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + rng.Below(70);
    const std::size_t count = rng.Below(12);
    std::vector<Gf2Vector> vectors;
    std::vector<std::vector<bool>> rows;
    for (std::size_t j = 0; j < count; ++j) {
      Gf2Vector v(dim);
      std::vector<bool> row(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        const bool bit = rng.Below(4) == 0;
        v.Set(i, bit);
        row[i] = bit;
      }
      vectors.push_back(v);
      rows.push_back(row);
    }
    CHECK(Gf2Rank(vectors) == testing::BruteGf2Rank(rows));
  }
}

TEST_CASE("parallel chunks cover the range in order") {
  for (unsigned threads : {1u, 3u, 8u}) {
    SetThreadCount(threads);
    std::vector<std::atomic<int>> hits(1000);
    ParallelChunks(1000, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) ++hits[i];
    });
    for (auto& h : hits) CHECK(h.load() == 1);
    CHECK(ChunkCount(0) == 1);
    CHECK(ChunkCount(2) <= 2);
  }
  SetThreadCount(4);
  CHECK_THROWS_AS(
      ParallelChunks(100,
                     [](std::size_t chunk, std::size_t, std::size_t) {
                       if (chunk == 1) throw std::runtime_error("boom");
                     }),
      std::runtime_error);
  SetThreadCount(0);
}

}  // namespace
}  // namespace parbasis
