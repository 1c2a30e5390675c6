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

#include "pnr/cli/plot_script.h"

#include <ostream>

namespace pnr {

namespace {

// Python string literal.
std::string quoted(const std::string &s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\\' || c == '\'') {
            out += '\\';
        }
        out += c;
    }
    return out + "'";
}

void preamble(std::ostream &out, const std::string &csv_path) {
    out << "#!/usr/bin/env python3\n"
           "# Generated by `pnr`. Usage: python3 <this file> [output.png]\n"
           "import csv\n"
           "import sys\n"
           "\n"
           "import matplotlib\n"
           "matplotlib.use('Agg')\n"
           "import matplotlib.pyplot as plt\n"
           "\n"
           "CSV_PATH = "
        << quoted(csv_path)
        << "\n"
           "\n"
           "with open(CSV_PATH, newline='') as f:\n"
           "    rows = list(csv.DictReader(f))\n"
           "\n"
           "\n"
           "def column(name):\n"
           "    return [float(r[name]) if r[name] != '' else float('nan') for r in rows]\n"
           "\n"
           "\n";
}

}  // namespace

void write_sweep_plot_script(std::ostream &out, const std::string &csv_path, const ErrorCurve &curve) {
    preamble(out, csv_path);
    std::string xlabel = curve.kind == NoiseKind::GAUSSIAN ? "sigma (rad)" : "gamma (rad)";
    out << "x = column('noise_param')\n"
           "fig, ax = plt.subplots(figsize=(6, 4.5))\n";
    auto series = [&](const std::string &suffix, const std::string &style, const std::string &tag) {
        out << "ax.plot(x, column('p_helstrom" << suffix << "'), 'k" << style << "', label='Helstrom" << tag
            << "')\n"
            << "ax.plot(x, column('p_homodyne" << suffix << "'), 'tab:green" << "', linestyle='" << style
            << "', label='homodyne" << tag << "')\n"
            << "ax.plot(x, column('p_skellam" << suffix << "'), 'tab:red" << "', linestyle='" << style
            << "', label='photon-number resolving" << tag << "')\n"
            << "mc = column('mc_mean" << suffix << "')\n"
            << "if any(v == v for v in mc):\n"
            << "    ax.errorbar(x, mc, yerr=column('mc_stderr" << suffix
            << "'), fmt='o', color='tab:blue', ms=3, label='Monte Carlo" << tag << "')\n";
    };
    if (curve.matched) {
        series("_uniform", "-", " (uniform)");
        series("_gaussian", "--", " (gaussian)");
    } else {
        series("", "-", "");
    }
    out << "ax.set_yscale('log')\n"
           "ax.set_xlabel("
        << quoted(xlabel)
        << ")\n"
           "ax.set_ylabel('error probability')\n"
           "ax.legend(fontsize=8)\n"
           "fig.tight_layout()\n"
           "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else CSV_PATH + '.png', dpi=150)\n";
}

void write_distribution_plot_script(std::ostream &out, const std::string &csv_path) {
    preamble(out, csv_path);
    out << "y = column('y')\n"
           "fig, ax = plt.subplots(figsize=(6, 4.5))\n"
           "ax.bar(y, column('skellam_pmf'), width=0.9, color='tab:red', alpha=0.5, label='Skellam')\n"
           "mc = column('mc_frequency')\n"
           "if any(v == v for v in mc):\n"
           "    ax.plot(y, mc, 'o', color='tab:blue', ms=3, label='Monte Carlo')\n"
           "ax.plot(y, column('homodyne_overlay'), color='tab:green', label='homodyne (rescaled)')\n"
           "ax.set_xlabel('n_c - n_d')\n"
           "ax.set_ylabel('probability')\n"
           "ax.legend(fontsize=8)\n"
           "fig.tight_layout()\n"
           "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else CSV_PATH + '.png', dpi=150)\n";
}

}  // namespace pnr
