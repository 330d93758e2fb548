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

#ifndef MSHIFT_CLI_H_
#define MSHIFT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mshift {

// Process exit statuses.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitBadInput = 2,
  kExitNoLinearQuotients = 3,
  kExitNotMatroidal = 4,
  kExitOracleCap = 5,
};

// Runs the command line `args` (args[0] is the program name) writing the
// report to `out` and diagnostics to `err`. Returns the exit status.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mshift

#endif  // MSHIFT_CLI_H_
