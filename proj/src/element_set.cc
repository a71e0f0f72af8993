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

#include "subcert/element_set.h"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "subcert/error.h"

namespace subcert {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(FromUnsorted(std::vector<ElementId>(ids))) {}

ElementSet ElementSet::FromUnsorted(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  ElementSet s;
  s.ids_ = std::move(ids);
  return s;
}

ElementSet ElementSet::Range(ElementId n) {
  if (n < 0) throw InvalidArgument("ElementSet::Range: negative size");
  ElementSet s;
  s.ids_.resize(n);
  std::iota(s.ids_.begin(), s.ids_.end(), 0);
  return s;
}

bool ElementSet::Contains(ElementId a) const {
  return std::binary_search(ids_.begin(), ids_.end(), a);
}

void ElementSet::Insert(ElementId a) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), a);
  if (it == ids_.end() || *it != a) ids_.insert(it, a);
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet out;
  out.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

void ElementSet::CheckRange(ElementId n) const {
  if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= n)) {
    throw InvalidArgument("element id out of range [0, " + std::to_string(n) +
                          ")");
  }
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  for (size_t i = 0; i < ids_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids_[i]);
  }
  return out + "}";
}

}  // namespace subcert
