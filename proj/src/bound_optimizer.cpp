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

#include "pmx/bound_optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "pmx/nelder_mead.hpp"
#include "pmx/sampling.hpp"

namespace pmx {

namespace {

constexpr int kNumTables = 16;
constexpr int kNumPairs = kNumTables * kNumTables;
constexpr int kAngleParams = 10;  // m, n, r, t, o
constexpr int kGeneralParams = kAngleParams + 18;

double sign_of(int bit) { return (bit & 1) ? -1.0 : 1.0; }

Vec3 from_angles(double theta, double phi) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

void to_angles(const Vec3 &v, double &theta, double &phi) {
    theta = std::acos(std::clamp(v[2], -1.0, 1.0));
    phi = std::atan2(v[1], v[0]);
}

Mat3 from_flat(std::span<const double> x) {
    Mat3 t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) t(i, j) = x[3 * i + j];
    }
    return t;
}

// Weights of the four correlation terms for a fixed (F, G):
// p = 1/2 + 1/8 [w_mo X_mo + w_mS X_mS + w_nr Y_nr + w_Tr Y_Tr].
struct TermWeights {
    double m_o = 0, m_S = 0, n_r = 0, T_r = 0;

    TermWeights(const BooleanTable &F, const BooleanTable &G) {
        for (int b = 0; b < 2; ++b) {
            const double s = sign_of(b + G(0, b));
            (G.constant_in_first(b) ? m_o : m_S) += s;
        }
        for (int a = 0; a < 2; ++a) {
            const double s = sign_of(a + F(0, a));
            (F.constant_in_first(a) ? n_r : T_r) += s;
        }
    }
};

struct Candidate {
    Vec3 m, n, r, t, o;
    Mat3 T, S;
};

Candidate decode(std::span<const double> x, bool general) {
    Candidate c;
    c.m = from_angles(x[0], x[1]);
    c.n = from_angles(x[2], x[3]);
    c.r = from_angles(x[4], x[5]);
    c.t = from_angles(x[6], x[7]);
    c.o = from_angles(x[8], x[9]);
    if (general) {
        c.T = from_flat(x.subspan(10, 9));
        c.S = from_flat(x.subspan(19, 9));
        const double nt = c.T.norm(), ns = c.S.norm();
        if (nt > 0) c.T /= nt;
        if (ns > 0) c.S /= ns;
    } else {
        c.T = c.m * c.n.transpose();
        c.S = c.t * c.o.transpose();
    }
    return c;
}

StrategyPair to_strategy(const Candidate &c, unsigned f_mask, unsigned g_mask, bool general) {
    StrategyPair s;
    s.alice.mode = general ? MapMode::Correlated : MapMode::MeasureReprepare;
    s.alice.m = {c.m, c.m};
    s.alice.n = {c.n, c.n};
    s.alice.T = {c.T, c.T};
    s.alice.F = BooleanTable::from_mask(f_mask);
    s.bob.r = c.r;
    s.bob.mode = general ? MapMode::Correlated : MapMode::MeasureReprepare;
    s.bob.t = c.t;
    s.bob.o = c.o;
    s.bob.S = c.S;
    s.bob.G = BooleanTable::from_mask(g_mask);
    return s;
}

bool squares_to_identity(const Mat3 &t) {
    ComplexMatrix op = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) op += t(i, j) * kron(pauli(i + 1), pauli(j + 1));
    }
    return ((op * op) - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-9;
}

struct TaskResult {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> x;
    long long evaluations = 0;
};

class SuccessObjective {
   public:
    SuccessObjective(const ProcessCoefficients &w, unsigned f_mask, unsigned g_mask, bool general)
        : w_(w),
          weights_(BooleanTable::from_mask(f_mask), BooleanTable::from_mask(g_mask)),
          f_mask_(f_mask),
          g_mask_(g_mask),
          general_(general) {}

    /// Success probability, or -inf for a rejected candidate.
    double value(std::span<const double> x) const {
        const Candidate c = decode(x, general_);
        if (general_ && !feasible(c)) return -std::numeric_limits<double>::infinity();
        double acc = 0;
        if (weights_.m_o != 0) acc += weights_.m_o * c.m.dot(w_.c * c.o);
        if (weights_.m_S != 0) acc += weights_.m_S * contract_pair_last(w_.d, c.m, c.S);
        if (weights_.n_r != 0) acc += weights_.n_r * c.n.dot(w_.e * c.r);
        if (weights_.T_r != 0) acc += weights_.T_r * contract_pair_first(w_.f, c.T, c.r);
        return 0.5 + 0.125 * acc;
    }

   private:
    bool feasible(const Candidate &c) const {
        if (!squares_to_identity(c.T) || !squares_to_identity(c.S)) return false;
        try {
            validate_strategy(to_strategy(c, f_mask_, g_mask_, true));
        } catch (const StrategyError &) {
            return false;
        }
        return true;
    }

    const ProcessCoefficients &w_;
    TermWeights weights_;
    unsigned f_mask_, g_mask_;
    bool general_;
};

std::vector<double> random_start(Rng &rng, bool general) {
    std::vector<double> x(general ? kGeneralParams : kAngleParams);
    std::array<Vec3, 5> v;
    for (int k = 0; k < 5; ++k) {
        v[k] = random_unit_vector(rng);
        to_angles(v[k], x[2 * k], x[2 * k + 1]);
    }
    if (general) {
        // Start from the feasible product tensors m n^T and t o^T.
        const Mat3 T = v[0] * v[1].transpose();
        const Mat3 S = v[3] * v[4].transpose();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                x[10 + 3 * i + j] = T(i, j);
                x[19 + 3 * i + j] = S(i, j);
            }
        }
    }
    return x;
}

TaskResult run_task(const ProcessCoefficients &coeffs, const OptimizerConfig &cfg, int pair, int restart) {
    const unsigned f_mask = static_cast<unsigned>(pair / kNumTables);
    const unsigned g_mask = static_cast<unsigned>(pair % kNumTables);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(pair), static_cast<std::uint32_t>(restart)};
    Rng rng(seq);

    const SuccessObjective objective(coeffs, f_mask, g_mask, cfg.general_tensors);
    const std::vector<double> start = random_start(rng, cfg.general_tensors);

    NelderMeadOptions opt;
    opt.max_iterations = cfg.max_iterations;
    opt.f_tolerance = cfg.tolerance;
    opt.x_tolerance = std::numeric_limits<double>::infinity();
    opt.initial_step = 0.5;
    auto negated = [&](std::span<const double> x) { return -objective.value(x); };
    NelderMeadResult nm = nelder_mead_minimize(negated, start, opt);

    TaskResult out;
    out.value = -nm.value;
    out.x = std::move(nm.x);
    out.evaluations = nm.evaluations;
    return out;
}

void check_inputs(const ProcessMatrix &w, const OptimizerConfig &cfg) {
    if (cfg.restarts <= 0 || cfg.max_iterations <= 0 || !(cfg.tolerance > 0)) {
        throw std::invalid_argument("optimizer config values must be positive");
    }
    if (!(w.layout() == SpaceLayout::qubits())) throw std::invalid_argument("optimizer requires a four-qubit process");
    if (!validate_process(w).valid()) throw std::invalid_argument("optimizer requires a valid process");
}

OptimizationResult reduce(const std::vector<TaskResult> &tasks, const OptimizerConfig &cfg) {
    OptimizationResult out;
    out.restart_bests.assign(cfg.restarts, -std::numeric_limits<double>::infinity());
    size_t best = 0;
    for (size_t k = 0; k < tasks.size(); ++k) {
        const int restart = static_cast<int>(k % cfg.restarts);
        out.restart_bests[restart] = std::max(out.restart_bests[restart], tasks[k].value);
        out.evaluations += tasks[k].evaluations;
        if (tasks[k].value > tasks[best].value) best = k;
    }
    const int pair = static_cast<int>(best / cfg.restarts);
    out.f_mask = static_cast<unsigned>(pair / kNumTables);
    out.g_mask = static_cast<unsigned>(pair % kNumTables);
    out.best_restart = static_cast<int>(best % cfg.restarts);
    out.best_value = tasks[best].value;
    out.best = to_strategy(decode(tasks[best].x, cfg.general_tensors), out.f_mask, out.g_mask, cfg.general_tensors);
    out.branch = branch_of(out.best.alice.F, out.best.bob.G);
    return out;
}

}  // namespace

std::string_view to_string(Branch branch) {
    switch (branch) {
        case Branch::LocalLocal: return "n.r|m.o";
        case Branch::LocalCorrelated: return "n.r|m.S";
        case Branch::CorrelatedLocal: return "T.r|m.o";
        case Branch::CorrelatedCorrelated: return "T.r|m.S";
    }
    return "?";
}

Branch branch_of(const BooleanTable &F, const BooleanTable &G) {
    const bool alice_local = F.constant_in_first(0);
    const bool bob_local = G.constant_in_first(0);
    if (alice_local) return bob_local ? Branch::LocalLocal : Branch::LocalCorrelated;
    return bob_local ? Branch::CorrelatedLocal : Branch::CorrelatedCorrelated;
}

OptimizationResult maximize_success(const ProcessMatrix &w, const OptimizerConfig &cfg) {
    check_inputs(w, cfg);
    const ProcessCoefficients coeffs = ProcessCoefficients::from(w);
    const long n_tasks = static_cast<long>(kNumPairs) * cfg.restarts;
    std::vector<TaskResult> tasks(static_cast<size_t>(n_tasks));
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k < n_tasks; ++k) {
        tasks[k] = run_task(coeffs, cfg, static_cast<int>(k / cfg.restarts), static_cast<int>(k % cfg.restarts));
    }
    return reduce(tasks, cfg);
}

OptimizationResult maximize_success_serial(const ProcessMatrix &w, const OptimizerConfig &cfg) {
    check_inputs(w, cfg);
    const ProcessCoefficients coeffs = ProcessCoefficients::from(w);
    std::vector<TaskResult> tasks;
    tasks.reserve(static_cast<size_t>(kNumPairs) * cfg.restarts);
    for (int pair = 0; pair < kNumPairs; ++pair) {
        for (int restart = 0; restart < cfg.restarts; ++restart) tasks.push_back(run_task(coeffs, cfg, pair, restart));
    }
    return reduce(tasks, cfg);
}

CertReport certify_quantum_bound(const ProcessMatrix &w, const OptimizerConfig &cfg) {
    CertReport report;
    report.max_found = maximize_success(w, cfg).best_value;
    report.violated = report.max_found > report.bound + 1e-6;
    return report;
}

ProofVectors proof_vectors(const ProcessMatrix &w, const StrategyPair &s) {
    if (!(w.layout() == SpaceLayout::qubits())) throw std::invalid_argument("proof_vectors requires a four-qubit process");
    validate_strategy(s);
    const SpaceLayout &layout = w.layout();
    const ComplexMatrix root = psd_sqrt(w.normalized_state());

    auto bloch = [](const Vec3 &v) -> ComplexMatrix { return v[0] * pauli(1) + v[1] * pauli(2) + v[2] * pauli(3); };
    const Mat3 S = s.bob.correlation();
    ComplexMatrix o_s = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) o_s += S(i, j) * kron(pauli(i + 1), pauli(j + 1));
    }

    const Leg a2[] = {Leg::A2}, b1[] = {Leg::B1}, a1[] = {Leg::A1}, b1b2[] = {Leg::B1, Leg::B2};
    const ComplexMatrix op_a = embed(bloch(s.alice.n[0]), a2, layout) * embed(bloch(s.bob.r), b1, layout);
    const ComplexMatrix op_b = embed(bloch(s.alice.m[0]), a1, layout) * embed(o_s, b1b2, layout);
    const ComplexMatrix va = op_a * root;
    const ComplexMatrix vb = op_b * root;

    ProofVectors out;
    out.norm_a = std::sqrt(hs_inner(va, va).real());
    out.norm_b = std::sqrt(hs_inner(vb, vb).real());
    out.norm_i = std::sqrt(hs_inner(root, root).real());
    out.ab_inner = hs_inner(va, vb);
    out.ai_inner = hs_inner(va, root).real();
    out.bi_inner = hs_inner(vb, root).real();
    return out;
}

}  // namespace pmx
