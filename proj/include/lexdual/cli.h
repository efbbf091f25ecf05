// Copyright 2026 The lexdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXDUAL_CLI_H_
#define LEXDUAL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace lexdual {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Runs one CLI invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`. Returns 0 on success, 1 on a negative verdict
// (not dual, no equilibrium) and 2 on usage or input errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace lexdual

#endif  // LEXDUAL_CLI_H_
