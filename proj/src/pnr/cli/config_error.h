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

#ifndef PNR_CLI_CONFIG_ERROR_H
#define PNR_CLI_CONFIG_ERROR_H

#include <stdexcept>
#include <string>

namespace pnr {

/// Bad command-line or config-file settings (as opposed to bad data files or
/// numerical failures).
class ConfigError : public std::invalid_argument {
   public:
    explicit ConfigError(const std::string &message) : std::invalid_argument(message) {
    }
};

/// Failure of a numerical routine on otherwise valid input.
class NumericalError : public std::runtime_error {
   public:
    explicit NumericalError(const std::string &message) : std::runtime_error(message) {
    }
};

}  // namespace pnr

#endif
