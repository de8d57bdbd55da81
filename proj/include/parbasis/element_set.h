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

#ifndef PARBASIS_ELEMENT_SET_H_
#define PARBASIS_ELEMENT_SET_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace parbasis {

// Dense label of a ground-set element, in [0, m).
using ElementId = std::uint32_t;

// A finite set of element ids, stored sorted and duplicate-free.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);

  // Sorts and deduplicates.
  static ElementSet FromUnsorted(std::vector<ElementId> ids);
  // `ids` must already be strictly increasing.
  static ElementSet FromSorted(std::vector<ElementId> ids);
  // {0, 1, ..., n - 1}.
  static ElementSet Range(std::size_t n);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }
  ElementId front() const { return ids_.front(); }
  ElementId back() const { return ids_.back(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::span<const ElementId> span() const { return ids_; }
  const std::vector<ElementId>& ids() const { return ids_; }

  bool Contains(ElementId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }
  bool IsSubsetOf(const ElementSet& other) const;

  ElementSet Without(ElementId id) const;
  ElementSet With(ElementId id) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.ids_ <=> b.ids_;
  }

  std::string DebugString() const;

 private:
  explicit ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {}
  std::vector<ElementId> ids_;
};

ElementSet Union(const ElementSet& a, const ElementSet& b);
ElementSet Intersection(const ElementSet& a, const ElementSet& b);
ElementSet Difference(const ElementSet& a, const ElementSet& b);
ElementSet SymmetricDifference(const ElementSet& a, const ElementSet& b);
// |a \ b| without materializing the difference.
std::size_t DifferenceSize(const ElementSet& a, const ElementSet& b);

// A minimal dependent set.
using Circuit = ElementSet;

}  // namespace parbasis

#endif  // PARBASIS_ELEMENT_SET_H_
