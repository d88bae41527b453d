// Copyright 2026 The translit-norm Authors.
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

#ifndef TRANSLIT_CLI_H_
#define TRANSLIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace translit {

// Process exit codes of the translit-norm tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIoOrFormat = 1,
  kExitInvalidTerm = 2,
  kExitGoldMismatch = 3,
};

// Runs one command line (args[0] is the program name). TSV results go to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace translit

#endif  // TRANSLIT_CLI_H_
