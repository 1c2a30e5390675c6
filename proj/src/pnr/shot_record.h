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

#ifndef PNR_SHOT_RECORD_H
#define PNR_SHOT_RECORD_H

#include <cstdint>
#include <optional>

#include "pnr/receiver.h"

namespace pnr {

/// One laser shot: photocounts on both ports at a given LO phase.
struct ShotRecord {
    uint32_t position_index = 0;
    /// LO (piezo) phase of the shot, radians.
    double phase_tag = 0;
    uint64_t n_c = 0;
    uint64_t n_d = 0;
    /// Empty for raw scan shots.
    std::optional<Bit> true_bit;

    int64_t difference() const {
        return static_cast<int64_t>(n_c) - static_cast<int64_t>(n_d);
    }
    bool operator==(const ShotRecord &other) const = default;
};

}  // namespace pnr

#endif
