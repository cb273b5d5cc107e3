// Copyright 2026 The pipcodes Authors
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

#ifndef PIPCODES_CLI_H
#define PIPCODES_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace pipcodes {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitValidation = 2,
    kExitCap = 3,
};

/// Runs one subcommand. args excludes the program name, e.g.
/// {"find-codes", "example1.json", "--mode", "noiseless"}.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pipcodes

#endif
