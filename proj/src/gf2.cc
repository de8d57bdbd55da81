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

#include "parbasis/gf2.h"

#include <algorithm>
#include <bit>

#include "parbasis/errors.h"

namespace parbasis {

bool Gf2Vector::IsZero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string Gf2Vector::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = std::max<std::size_t>(1, (dimension_ + 3) / 4);
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t bit = 4 * d + b;
      if (bit < dimension_ && Get(bit)) nibble |= 1u << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

Gf2Vector Gf2Vector::FromHex(const std::string& hex, std::size_t dimension) {
  if (hex.empty()) throw InputError("empty hex column");
  Gf2Vector v(dimension);
  const std::size_t digits = hex.size();
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    unsigned nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw InputError("invalid hex digit in column '" + hex + "'");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1u)) continue;
      const std::size_t bit = 4 * d + b;
      if (bit >= dimension) {
        throw InputError("hex column '" + hex + "' exceeds dimension " +
                         std::to_string(dimension));
      }
      v.Set(bit, true);
    }
  }
  return v;
}

std::size_t Gf2Rank(std::span<const Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t words = vectors.front().words().size();
  // Basis rows indexed by pivot bit.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::uint64_t> row(words);
  for (const Gf2Vector& v : vectors) {
    std::copy(v.words().begin(), v.words().end(), row.begin());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::size_t p = pivots[k];
      if ((row[p / 64] >> (p % 64)) & 1u) {
        for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[k][w];
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      if (row[w] != 0) {
        pivots.push_back(64 * w + static_cast<std::size_t>(std::countr_zero(row[w])));
        basis.push_back(row);
        break;
      }
    }
  }
  return basis.size();
}

}  // namespace parbasis
