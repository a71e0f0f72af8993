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

#ifndef SUBCERT_ELEMENT_SET_H_
#define SUBCERT_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace subcert {

using ElementId = int32_t;

// A set of ground-set elements stored as a strictly increasing id list.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);

  // Sorts and removes duplicates.
  static ElementSet FromUnsorted(std::vector<ElementId> ids);
  // Every id in [0, n). Throws InvalidArgument otherwise.
  static ElementSet Range(ElementId n);

  std::span<const ElementId> ids() const { return ids_; }
  size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool Contains(ElementId a) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  // No-op if already present.
  void Insert(ElementId a);
  ElementSet Union(const ElementSet& other) const;
  bool IsSubsetOf(const ElementSet& other) const;

  // Throws InvalidArgument unless every id is in [0, n).
  void CheckRange(ElementId n) const;

  std::string ToString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ElementId> ids_;
};

}  // namespace subcert

#endif  // SUBCERT_ELEMENT_SET_H_
