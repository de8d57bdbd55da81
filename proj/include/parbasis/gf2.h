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

#ifndef PARBASIS_GF2_H_
#define PARBASIS_GF2_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace parbasis {

// A vector over GF(2) packed into 64-bit words; bit i is coordinate i.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t dimension)
      : dimension_(dimension), words_((dimension + 63) / 64, 0) {}

  std::size_t dimension() const { return dimension_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool Get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void Set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= bit;
    } else {
      words_[i / 64] &= ~bit;
    }
  }
  void Flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool IsZero() const;
  Gf2Vector& operator^=(const Gf2Vector& other);

  // Hex with the most significant nibble first; coordinate 0 is the lowest
  // bit of the last digit. Always ceil(dimension / 4) digits (at least one).
  std::string ToHex() const;
  // Inverse of ToHex; rejects digits beyond `dimension` bits.
  static Gf2Vector FromHex(const std::string& hex, std::size_t dimension);

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rank over GF(2) of the given vectors (all of equal dimension).
std::size_t Gf2Rank(std::span<const Gf2Vector> vectors);

}  // namespace parbasis

#endif  // PARBASIS_GF2_H_
