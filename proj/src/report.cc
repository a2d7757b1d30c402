// Copyright 2026 The gperm Authors.
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

#include "gperm/report.h"

#include <algorithm>
#include <utility>

namespace gperm {

void Report::Add(std::string label, const Rat& lhs, const Rat& rhs) {
  entries_.push_back({std::move(label), lhs, rhs, lhs == rhs});
}

void Report::Append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void Report::OverrideRhs(std::size_t i, const Rat& rhs) {
  entries_.at(i).rhs = rhs;
  entries_.at(i).pass = entries_.at(i).lhs == rhs;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const CheckEntry& e) { return !e.pass; }));
}

}  // namespace gperm
