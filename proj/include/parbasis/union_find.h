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

#ifndef PARBASIS_UNION_FIND_H_
#define PARBASIS_UNION_FIND_H_

#include <cstdint>
#include <vector>

namespace parbasis {

// Disjoint-set forest over [0, n) whose Reset() is O(1): a vertex's entry is
// only trusted when its stamp matches the current generation, so a query that
// touches k vertices costs O(k) regardless of n.
class StampedUnionFind {
 public:
  StampedUnionFind() = default;
  explicit StampedUnionFind(std::uint32_t n) { Resize(n); }

  void Resize(std::uint32_t n) {
    parent_.assign(n, 0);
    stamp_.assign(n, 0);
    generation_ = 1;
  }
  std::uint32_t size() const { return static_cast<std::uint32_t>(parent_.size()); }

  void Reset() {
    if (++generation_ == 0) {
      stamp_.assign(stamp_.size(), 0);
      generation_ = 1;
    }
  }

  std::uint32_t Find(std::uint32_t v) {
    Touch(v);
    while (parent_[v] != v) {
      Touch(parent_[v]);
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Returns false if `a` and `b` were already connected.
  bool Union(std::uint32_t a, std::uint32_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  void Touch(std::uint32_t v) {
    if (stamp_[v] != generation_) {
      stamp_[v] = generation_;
      parent_[v] = v;
    }
  }

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 1;
};

}  // namespace parbasis

#endif  // PARBASIS_UNION_FIND_H_
