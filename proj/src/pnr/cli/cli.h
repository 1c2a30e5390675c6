// Copyright 2026 The pnr-discrimination Authors
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

#ifndef PNR_CLI_CLI_H
#define PNR_CLI_CLI_H

#include <iosfwd>

namespace pnr {

/// Process exit codes.
enum ExitCode : int {
    EXIT_OK = 0,
    /// Bad flags or config file.
    EXIT_CONFIG = 2,
    /// Unreadable, missing or malformed data file.
    EXIT_DATA = 3,
    /// A numerical routine failed.
    EXIT_NUMERICAL = 4,
};

/// Entry point of the `pnr` tool: subcommands sweep, distributions,
/// synthesize and calibrate. Diagnostics go to `err`; CSV written to stdout
/// (no --out) goes to `out`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace pnr

#endif
