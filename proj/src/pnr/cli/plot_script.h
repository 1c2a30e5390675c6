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

#ifndef PNR_CLI_PLOT_SCRIPT_H
#define PNR_CLI_PLOT_SCRIPT_H

#include <iosfwd>
#include <string>

#include "pnr/cli/error_curve.h"

namespace pnr {

/// Standalone matplotlib script that plots the error-curve CSV at `csv_path`
/// on a logarithmic probability axis.
void write_sweep_plot_script(std::ostream &out, const std::string &csv_path, const ErrorCurve &curve);

/// Standalone matplotlib script for a distributions CSV: Skellam bars, MC
/// frequencies (if present) and the homodyne overlay.
void write_distribution_plot_script(std::ostream &out, const std::string &csv_path);

}  // namespace pnr

#endif
