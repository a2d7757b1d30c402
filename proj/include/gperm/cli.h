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

#ifndef GPERM_CLI_H_
#define GPERM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gperm {

// Runs one CLI invocation. args[0] is the program name. Writes a single
// JSON report to out and diagnostics to err. Returns 0 when every check
// passed, 1 when some check failed, 2 on input errors (nothing is written
// to out in that case).
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gperm

#endif  // GPERM_CLI_H_
