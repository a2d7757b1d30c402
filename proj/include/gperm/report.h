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

#ifndef GPERM_REPORT_H_
#define GPERM_REPORT_H_

#include <cstddef>
#include <string>
#include <vector>

#include "gperm/rational.h"

namespace gperm {

// One exact identity check. pass is always lhs == rhs.
struct CheckEntry {
  std::string label;
  Rat lhs;
  Rat rhs;
  bool pass;
};

class Report {
 public:
  void Add(std::string label, const Rat& lhs, const Rat& rhs);
  void Append(const Report& other);

  // Sets rhs of entry i (test hook for negative controls).
  void OverrideRhs(std::size_t i, const Rat& rhs);

  const std::vector<CheckEntry>& entries() const { return entries_; }
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace gperm

#endif  // GPERM_REPORT_H_
