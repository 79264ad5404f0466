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

#include "pmx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pmx {

namespace {

// Every non-identity Pauli string on A1 A2 B1 B2 whose support is an
// allowed term type.
const std::vector<ComplexMatrix> &allowed_pauli_strings() {
    static const std::vector<ComplexMatrix> strings = [] {
        std::vector<ComplexMatrix> out;
        for (int flat = 1; flat < 256; ++flat) {
            const int idx[4] = {(flat >> 6) & 3, (flat >> 4) & 3, (flat >> 2) & 3, flat & 3};
            unsigned mask = 0;
            for (int k = 0; k < 4; ++k) {
                if (idx[k] != 0) mask |= 1u << k;
            }
            if (!is_allowed_term_type(TermType(mask))) continue;
            std::string labels;
            for (int k : idx) labels += pauli_label(k);
            out.push_back(pauli_string(labels));
        }
        return out;
    }();
    return strings;
}

}  // namespace

Vec3 random_unit_vector(Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        Vec3 v(gauss(rng), gauss(rng), gauss(rng));
        const double norm = v.norm();
        if (norm > 1e-12) return v / norm;
    }
}

StrategyPair random_strategy(Rng &rng) {
    std::uniform_int_distribution<unsigned> table(0, 15);
    StrategyPair s;
    s.alice.mode = MapMode::MeasureReprepare;
    for (int a = 0; a < 2; ++a) {
        s.alice.m[a] = random_unit_vector(rng);
        s.alice.n[a] = random_unit_vector(rng);
    }
    s.alice.F = BooleanTable::from_mask(table(rng));
    s.bob.r = random_unit_vector(rng);
    s.bob.mode = MapMode::MeasureReprepare;
    s.bob.t = random_unit_vector(rng);
    s.bob.o = random_unit_vector(rng);
    s.bob.G = BooleanTable::from_mask(table(rng));
    return s;
}

WernerParams random_werner_params(Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double radius = std::sqrt(unit(rng));
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

ProcessMatrix random_structured_process(Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto &strings = allowed_pauli_strings();
    ComplexMatrix traceless = ComplexMatrix::Zero(16, 16);
    for (const auto &p : strings) traceless += gauss(rng) * p;
    const double lowest = hermitian_eigensystem(traceless).values[0];
    // 1 + s * lowest >= 0 keeps I + s X positive.
    const double limit = lowest < 0 ? -1.0 / lowest : 1.0;
    const double scale = unit(rng) < 0.5 ? limit : limit * unit(rng);
    return ProcessMatrix(0.25 * (ComplexMatrix::Identity(16, 16) + scale * traceless), SpaceLayout::qubits());
}

ProcessMatrix random_valid_process(Rng &rng, size_t draw_index) {
    if (draw_index % 2 == 0) return make_werner(random_werner_params(rng));
    return random_structured_process(rng);
}

}  // namespace pmx
