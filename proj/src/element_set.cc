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

#include "parbasis/element_set.h"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <utility>

namespace parbasis {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ids_(FromUnsorted(std::vector<ElementId>(ids)).ids_) {}

ElementSet ElementSet::FromUnsorted(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ElementSet(std::move(ids));
}

ElementSet ElementSet::FromSorted(std::vector<ElementId> ids) {
  return ElementSet(std::move(ids));
}

ElementSet ElementSet::Range(std::size_t n) {
  std::vector<ElementId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ElementId>(i);
  return ElementSet(std::move(ids));
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

ElementSet ElementSet::Without(ElementId id) const {
  std::vector<ElementId> out;
  out.reserve(ids_.size());
  for (ElementId e : ids_) {
    if (e != id) out.push_back(e);
  }
  return ElementSet(std::move(out));
}

ElementSet ElementSet::With(ElementId id) const {
  std::vector<ElementId> out = ids_;
  auto it = std::lower_bound(out.begin(), out.end(), id);
  if (it == out.end() || *it != id) out.insert(it, id);
  return ElementSet(std::move(out));
}

std::string ElementSet::DebugString() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) os << ',';
    os << ids_[i];
  }
  os << '}';
  return os.str();
}

ElementSet Union(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ElementSet::FromSorted(std::move(out));
}

ElementSet Intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ElementSet::FromSorted(std::move(out));
}

ElementSet Difference(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ElementSet::FromSorted(std::move(out));
}

ElementSet SymmetricDifference(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return ElementSet::FromSorted(std::move(out));
}

std::size_t DifferenceSize(const ElementSet& a, const ElementSet& b) {
  std::size_t count = 0;
  auto j = b.begin();
  for (ElementId e : a) {
    while (j != b.end() && *j < e) ++j;
    if (j == b.end() || *j != e) ++count;
  }
  return count;
}

}  // namespace parbasis
