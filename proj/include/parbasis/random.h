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

#ifndef PARBASIS_RANDOM_H_
#define PARBASIS_RANDOM_H_

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace parbasis {

// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Key of the stream (seed, a, b). Used so that sample `b` of invocation `a`
// is a pure function of its coordinates.
constexpr std::uint64_t StreamKey(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b) {
  return Mix64(Mix64(Mix64(seed) ^ a) ^ Mix64(b + 0x632be59bd9b4e019ULL));
}

// SplitMix64 generator. Satisfies UniformRandomBitGenerator; the bounded and
// real-valued helpers are implemented here so that outputs are identical on
// every standard library.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). `bound` must be positive.
  std::uint64_t Below(std::uint64_t bound) {
    __uint128_t product = static_cast<__uint128_t>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<__uint128_t>((*this)()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  double Unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[Below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

// Threshold t such that `draw < t` for a uniform 64-bit draw has probability
// `p` (saturating at p >= 1, where every draw passes).
struct BernoulliThreshold {
  explicit BernoulliThreshold(double p);
  bool Accept(std::uint64_t draw) const { return always || draw < threshold; }

  std::uint64_t threshold = 0;
  bool always = false;
};

}  // namespace parbasis

#endif  // PARBASIS_RANDOM_H_
