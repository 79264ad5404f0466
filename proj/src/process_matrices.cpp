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

#include "pmx/process_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pmx/nelder_mead.hpp"

namespace pmx {

namespace {

bool is_full_bipartite(const SpaceLayout &layout) {
    return layout.num_legs() == 4 && layout.contains(Leg::A1) && layout.contains(Leg::A2) &&
           layout.contains(Leg::B1) && layout.contains(Leg::B2);
}

ComplexMatrix qubit_identity() { return ComplexMatrix::Identity(16, 16); }

// Leg order A1 A2 B1 B2.
const ComplexMatrix &zz_a2b1() {
    static const ComplexMatrix m = pauli_string("IZZI");
    return m;
}

const ComplexMatrix &zxz_a1b1b2() {
    static const ComplexMatrix m = pauli_string("ZIXZ");
    return m;
}

}  // namespace

ProcessMatrix::ProcessMatrix(ComplexMatrix matrix, SpaceLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
    if (matrix_.rows() != layout_.total_dim() || matrix_.cols() != layout_.total_dim()) {
        throw std::invalid_argument("ProcessMatrix: matrix does not match layout");
    }
}

ComplexMatrix ProcessMatrix::normalized_state() const {
    return matrix_ / static_cast<double>(layout_.dim(Leg::A2) * layout_.dim(Leg::B2));
}

TermType TermType::of(std::initializer_list<Leg> legs) {
    unsigned mask = 0;
    for (Leg leg : legs) mask |= 1u << static_cast<unsigned>(leg);
    return TermType(mask);
}

std::string TermType::name() const {
    if (mask_ == 0) return "I";
    std::string out;
    for (Leg leg : kAllLegs) {
        if (has(leg)) out += to_string(leg);
    }
    return out;
}

const std::array<TermType, 8> &allowed_term_types() {
    static const std::array<TermType, 8> types = {
        TermType(),
        TermType::of({Leg::A1, Leg::B2}),
        TermType::of({Leg::A1, Leg::B1, Leg::B2}),
        TermType::of({Leg::A2, Leg::B1}),
        TermType::of({Leg::A1, Leg::A2, Leg::B1}),
        TermType::of({Leg::A1}),
        TermType::of({Leg::B1}),
        TermType::of({Leg::A1, Leg::B1}),
    };
    return types;
}

bool is_allowed_term_type(TermType type) {
    const auto &allowed = allowed_term_types();
    return std::find(allowed.begin(), allowed.end(), type) != allowed.end();
}

ValidityReport validate_process(const ProcessMatrix &w, double tol) {
    const SpaceLayout &layout = w.layout();
    if (!is_full_bipartite(layout)) throw std::invalid_argument("validate_process: layout must contain A1, A2, B1, B2");

    ValidityReport report;
    const ComplexMatrix &m = w.matrix();
    report.trace = m.trace().real();
    const double expected_trace = layout.dim(Leg::A2) * layout.dim(Leg::B2);
    report.trace_ok = std::abs(m.trace() - expected_trace) <= tol * std::max(1.0, expected_trace);

    if (is_hermitian(m, 1e-10)) {
        report.min_eigenvalue = hermitian_eigensystem(m).values[0];
        report.psd = report.min_eigenvalue >= -tol;
    } else {
        report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
        report.psd = false;
    }

    for (auto &term : hs_decompose(m, layout, tol)) {
        unsigned mask = 0;
        for (size_t k = 0; k < term.index.size(); ++k) {
            if (term.index[k] != 0) mask |= 1u << static_cast<unsigned>(layout.legs()[k].label);
        }
        const TermType type(mask);
        if (!is_allowed_term_type(type)) {
            const double coeff = std::abs(term.coeff.imag()) > tol ? std::abs(term.coeff) : term.coeff.real();
            report.forbidden_terms.push_back({type, std::move(term.index), coeff});
        }
    }
    return report;
}

ProcessMatrix make_ocb() {
    const double k = 1.0 / std::sqrt(2.0);
    return ProcessMatrix(0.25 * (qubit_identity() + k * (zz_a2b1() + zxz_a1b1b2())), SpaceLayout::qubits());
}

ProcessMatrix make_noise() { return ProcessMatrix(0.25 * qubit_identity(), SpaceLayout::qubits()); }

ProcessMatrix make_werner(WernerParams p) {
    return ProcessMatrix(0.25 * (qubit_identity() + p.eta1 * zz_a2b1() + p.eta2 * zxz_a1b1b2()),
                         SpaceLayout::qubits());
}

ProcessMatrix make_causal_channel(SignalDirection direction, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("make_causal_channel: sign must be +1 or -1");
    const ComplexMatrix &term = direction == SignalDirection::AToB ? zz_a2b1() : zxz_a1b1b2();
    return ProcessMatrix(0.25 * (qubit_identity() + static_cast<double>(sign) * term), SpaceLayout::qubits());
}

void require_valid_werner(WernerParams p) {
    if (!std::isfinite(p.eta1) || !std::isfinite(p.eta2) || p.eta1 * p.eta1 + p.eta2 * p.eta2 > 1.0 + 1e-12) {
        throw std::invalid_argument("Werner parameters must satisfy eta1^2 + eta2^2 <= 1");
    }
}

bool is_causally_separable_werner(WernerParams p) {
    require_valid_werner(p);
    return std::abs(p.eta1) + std::abs(p.eta2) <= 1.0 + 1e-12;
}

double geometric_distance_werner(WernerParams p) {
    require_valid_werner(p);
    constexpr int kGrid = 101;
    auto objective = [&](double lambda, double e, double d) {
        const double u = lambda * e - p.eta1;
        const double v = (1.0 - lambda) * d - p.eta2;
        return u * u + v * v;
    };

    // The objective splits as g1(lambda, e) + g2(lambda, d), so the minimum
    // over the full lambda x e x d grid is found one lambda slice at a time.
    double best = std::numeric_limits<double>::infinity();
    double best_lambda = 0, best_e = 0, best_d = 0;
    for (int i = 0; i < kGrid; ++i) {
        const double lambda = i / double(kGrid - 1);
        double g1 = std::numeric_limits<double>::infinity(), g2 = g1, arg_e = 0, arg_d = 0;
        for (int j = 0; j < kGrid; ++j) {
            const double s = -1.0 + 2.0 * j / double(kGrid - 1);
            const double u = lambda * s - p.eta1;
            const double v = (1.0 - lambda) * s - p.eta2;
            if (u * u < g1) {
                g1 = u * u;
                arg_e = s;
            }
            if (v * v < g2) {
                g2 = v * v;
                arg_d = s;
            }
        }
        if (g1 + g2 < best) {
            best = g1 + g2;
            best_lambda = lambda;
            best_e = arg_e;
            best_d = arg_d;
        }
    }
    if (best == 0.0) return 0.0;

    auto clamp_eval = [&](std::span<const double> x) {
        return objective(std::clamp(x[0], 0.0, 1.0), std::clamp(x[1], -1.0, 1.0), std::clamp(x[2], -1.0, 1.0));
    };
    NelderMeadOptions opt;
    opt.initial_step = 0.02;
    opt.f_tolerance = 1e-20;
    opt.x_tolerance = 1e-12;
    opt.max_iterations = 5000;
    const double start[3] = {best_lambda, best_e, best_d};
    const NelderMeadResult polished = nelder_mead_minimize(clamp_eval, start, opt);
    return std::min(best, polished.value);
}

}  // namespace pmx
