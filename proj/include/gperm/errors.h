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

#ifndef GPERM_ERRORS_H_
#define GPERM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gperm {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

class NotSubmodularError : public InputError {
 public:
  NotSubmodularError() : InputError("not submodular") {}
};

// An enumeration would exceed its configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("budget exceeded: " + what) {}
};

// A declared degree/period did not reproduce a direct count, or a fan
// failed to cover an enumerated point.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gperm

#endif  // GPERM_ERRORS_H_
