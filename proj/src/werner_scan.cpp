// Copyright 2026 The pmx Authors
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

#include "pmx/werner_scan.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pmx/causal_game.hpp"

namespace pmx {

double scan_coordinate(int k, int n) { return -1.0 + 2.0 * k / (n - 1); }

ScanRow scan_point(double eta1, double eta2) {
    ScanRow row;
    row.eta1 = eta1;
    row.eta2 = eta2;
    const ProcessMatrix w = make_werner({eta1, eta2});
    row.psd = is_psd(w.matrix(), kProcessTol);
    if (!row.psd) return row;
    // The disk test and the spectrum agree up to rounding; clamp so the
    // distance routine's precondition holds on the rim.
    WernerParams p{eta1, eta2};
    const double r2 = eta1 * eta1 + eta2 * eta2;
    if (r2 > 1.0) {
        const double s = 1.0 / std::sqrt(r2);
        p = {eta1 * s, eta2 * s};
    }
    row.separable = is_causally_separable_werner(p);
    row.distance = geometric_distance_werner(p);
    row.p_succ = success_probability(w, ocb_optimal_strategies());
    return row;
}

std::vector<ScanRow> scan_werner(int n) {
    if (n < 2) throw std::invalid_argument("scan grid needs at least 2 points per axis");
    const long total = static_cast<long>(n) * n;
    std::vector<ScanRow> rows(static_cast<size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
    for (long k = 0; k < total; ++k) {
        rows[k] = scan_point(scan_coordinate(static_cast<int>(k / n), n), scan_coordinate(static_cast<int>(k % n), n));
    }
    return rows;
}

std::vector<ScanRow> scan_werner_serial(int n) {
    if (n < 2) throw std::invalid_argument("scan grid needs at least 2 points per axis");
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows.push_back(scan_point(scan_coordinate(i, n), scan_coordinate(j, n)));
    }
    return rows;
}

void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows) {
    out << "eta1,eta2,psd,separable,distance,p_succ_paper_strategies\n";
    char buf[256];
    for (const auto &row : rows) {
        if (!row.psd) {
            std::snprintf(buf, sizeof buf, "%.15g,%.15g,0,,,\n", row.eta1, row.eta2);
        } else {
            std::snprintf(buf, sizeof buf, "%.15g,%.15g,1,%d,%.15g,%.15g\n", row.eta1, row.eta2,
                          row.separable.value_or(false) ? 1 : 0, row.distance.value_or(0.0), row.p_succ.value_or(0.0));
        }
        out << buf;
    }
}

}  // namespace pmx
