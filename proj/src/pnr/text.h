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

#ifndef PNR_TEXT_H
#define PNR_TEXT_H

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pnr {

/// Shortest round-tripping decimal form, or `significant` digits if given.
std::string format_double(double v, int significant = 0);

std::vector<std::string_view> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

/// Whole-string numeric parses; nullopt on any leftover characters.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

}  // namespace pnr

#endif
