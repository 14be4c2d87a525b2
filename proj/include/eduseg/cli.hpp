// Copyright 2026 The eduseg Authors.
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

// Command-line front end: `eduseg <train|predict|evaluate|cv|curve|generate|repair|stats>`.

#ifndef EDUSEG_CLI_HPP_
#define EDUSEG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace eduseg::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIoError = 3,
  kFormatError = 4,
  kContractError = 5,
};

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eduseg::cli

#endif  // EDUSEG_CLI_HPP_
