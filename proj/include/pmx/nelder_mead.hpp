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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace pmx {

struct NelderMeadOptions {
    int max_iterations = 2000;
    double f_tolerance = 1e-10;  // stop when f(worst) - f(best) <= this
    double x_tolerance = 1e-9;   // ... and the simplex diameter is at most this
    double initial_step = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
    int evaluations = 0;
};

/// Derivative-free minimisation (standard coefficients 1, 2, 1/2, 1/2).
/// The best vertex value never increases from one iteration to the next.
template <class Objective>
NelderMeadResult nelder_mead_minimize(Objective &&f, std::span<const double> x0, const NelderMeadOptions &opt) {
    const size_t n = x0.size();
    if (n == 0) throw std::invalid_argument("nelder_mead_minimize: empty parameter vector");

    std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(x0.begin(), x0.end()));
    for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += opt.initial_step;
    std::vector<double> fx(n + 1);
    int evaluations = 0;
    for (size_t i = 0; i <= n; ++i) {
        fx[i] = f(std::span<const double>(simplex[i]));
        ++evaluations;
    }

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto eval = [&](const std::vector<double> &x) {
        ++evaluations;
        return f(std::span<const double>(x));
    };

    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fx[a] < fx[b]; });
        const size_t best = order[0];
        const size_t worst = order[n];
        const size_t second_worst = order[n - 1];

        double diameter = 0;
        for (size_t i = 1; i <= n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                diameter = std::max(diameter, std::abs(simplex[order[i]][j] - simplex[best][j]));
            }
        }
        if (fx[worst] - fx[best] <= opt.f_tolerance && diameter <= opt.x_tolerance) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j];
        }
        for (double &c : centroid) c /= static_cast<double>(n);

        for (size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - simplex[worst][j]);
        const double fr = eval(xr);

        if (fr < fx[best]) {
            for (size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - simplex[worst][j]);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fx[worst] = fe;
            } else {
                simplex[worst] = xr;
                fx[worst] = fr;
            }
            continue;
        }
        if (fr < fx[second_worst]) {
            simplex[worst] = xr;
            fx[worst] = fr;
            continue;
        }
        const bool outside = fr < fx[worst];
        for (size_t j = 0; j < n; ++j) {
            xc[j] = outside ? centroid[j] + 0.5 * (xr[j] - centroid[j])
                            : centroid[j] + 0.5 * (simplex[worst][j] - centroid[j]);
        }
        const double fc = eval(xc);
        if (fc < (outside ? fr : fx[worst])) {
            simplex[worst] = xc;
            fx[worst] = fc;
            continue;
        }
        // shrink towards the best vertex
        for (size_t i = 1; i <= n; ++i) {
            auto &v = simplex[order[i]];
            for (size_t j = 0; j < n; ++j) v[j] = simplex[best][j] + 0.5 * (v[j] - simplex[best][j]);
            fx[order[i]] = eval(v);
        }
    }

    const size_t best = static_cast<size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
    return {simplex[best], fx[best], it, evaluations};
}

}  // namespace pmx
