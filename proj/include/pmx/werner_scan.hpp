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

#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "pmx/process_matrices.hpp"

namespace pmx {

struct ScanRow {
    double eta1 = 0;
    double eta2 = 0;
    bool psd = false;
    // Only filled for positive processes.
    std::optional<bool> separable;
    std::optional<double> distance;
    std::optional<double> p_succ;  // with ocb_optimal_strategies()
};

/// Grid coordinate k of n over [-1, 1].
double scan_coordinate(int k, int n);

ScanRow scan_point(double eta1, double eta2);

/// n x n grid over [-1, 1]^2, row-major with eta1 outer. Rows are filled
/// under OpenMP and always come back in grid order.
std::vector<ScanRow> scan_werner(int n);
std::vector<ScanRow> scan_werner_serial(int n);

/// Header eta1,eta2,psd,separable,distance,p_succ_paper_strategies; the
/// last three columns are empty where psd = 0.
void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows);

}  // namespace pmx
