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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmx/bound_optimizer.hpp"
#include "pmx/nelder_mead.hpp"
#include "pmx/sampling.hpp"

namespace pmx {
namespace {

OptimizerConfig quick(int restarts = 4) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    return cfg;
}

TEST(NelderMead, FindsQuadraticMinimum) {
    auto f = [](std::span<const double> x) { return (x[0] - 1) * (x[0] - 1) + 10 * (x[1] + 2) * (x[1] + 2); };
    const std::vector<double> x0{0, 0};
    NelderMeadOptions opt;
    opt.f_tolerance = 1e-16;
    opt.x_tolerance = 1e-10;
    const auto r = nelder_mead_minimize(f, x0, opt);
    EXPECT_NEAR(r.x[0], 1, 1e-6);
    EXPECT_NEAR(r.x[1], -2, 1e-6);
    EXPECT_LT(r.value, 1e-12);
}

TEST(NelderMead, BestValueNeverIncreases) {
    auto rosen = [](std::span<const double> x) {
        return 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]);
    };
    const std::vector<double> x0{-1.2, 1};
    double previous = std::numeric_limits<double>::infinity();
    for (int iters = 0; iters <= 300; ++iters) {
        NelderMeadOptions opt;
        opt.max_iterations = iters;
        const double v = nelder_mead_minimize(rosen, x0, opt).value;
        EXPECT_LE(v, previous) << iters;
        previous = v;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(NelderMead, RejectsEmptyInput) {
    auto f = [](std::span<const double>) { return 0.0; };
    EXPECT_THROW(nelder_mead_minimize(f, std::span<const double>(), NelderMeadOptions{}), std::invalid_argument);
}

TEST(Branch, NamesAndSelection) {
    EXPECT_EQ(to_string(Branch::LocalLocal), "n.r|m.o");
    EXPECT_EQ(to_string(Branch::CorrelatedCorrelated), "T.r|m.S");
    // F(x, a) = a ignores x; G(y, b) = y xor b does not.
    EXPECT_EQ(branch_of(BooleanTable::from_mask(0b1100), BooleanTable::from_mask(0b0110)), Branch::LocalCorrelated);
    EXPECT_EQ(branch_of(BooleanTable::from_mask(0b0110), BooleanTable::from_mask(0b0000)), Branch::CorrelatedLocal);
}

TEST(Optimizer, NoiseIsOneHalf) {
    const auto r = maximize_success(make_noise(), quick(2));
    EXPECT_NEAR(r.best_value, 0.5, 1e-6);
}

TEST(Optimizer, CausalChannelsGiveThreeQuarters) {
    for (auto dir : {SignalDirection::AToB, SignalDirection::BToA}) {
        const auto r = maximize_success(make_causal_channel(dir, 1), quick(4));
        EXPECT_NEAR(r.best_value, 0.75, 1e-3);
        EXPECT_LE(r.best_value, 0.75 + 1e-9);
    }
}

TEST(Optimizer, OcbReachesQuantumBound) {
    const auto r = maximize_success(make_ocb(), quick(8));
    EXPECT_GE(r.best_value, kQuantumBound - 1e-3);
    EXPECT_LE(r.best_value, kQuantumBound + 1e-6);
}

TEST(Optimizer, ReportedStrategiesReproduceValue) {
    Rng rng(41);
    for (int k = 0; k < 4; ++k) {
        const ProcessMatrix w = random_valid_process(rng, k);
        const auto r = maximize_success(w, quick(2));
        EXPECT_NO_THROW(validate_strategy(r.best));
        EXPECT_NEAR(success_probability(w, r.best), r.best_value, 1e-9);
        EXPECT_NEAR(oracle::success_by_trace(w.matrix(), r.best), r.best_value, 1e-9);
        EXPECT_EQ(r.branch, branch_of(BooleanTable::from_mask(r.f_mask), BooleanTable::from_mask(r.g_mask)));
        EXPECT_GE(r.best_value, 0.5 - 1e-9);
    }
}

TEST(Optimizer, RestartTraceIsConsistent) {
    const auto r = maximize_success(make_ocb(), quick(3));
    ASSERT_EQ(r.restart_bests.size(), 3u);
    EXPECT_DOUBLE_EQ(*std::max_element(r.restart_bests.begin(), r.restart_bests.end()), r.best_value);
    EXPECT_DOUBLE_EQ(r.restart_bests[r.best_restart], r.best_value);
    EXPECT_GT(r.evaluations, 0);
}

TEST(Optimizer, DeterministicForFixedSeed) {
    const ProcessMatrix w = make_werner({0.3, 0.6});
    const auto a = maximize_success(w, quick(2));
    const auto b = maximize_success(w, quick(2));
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.restart_bests, b.restart_bests);
    EXPECT_EQ(a.best.bob.o, b.best.bob.o);
    OptimizerConfig other = quick(2);
    other.seed = 7;
    EXPECT_NEAR(maximize_success(w, other).best_value, a.best_value, 1e-6);
}

TEST(Optimizer, GeneralTensorsDoNotBeatProducts) {
    OptimizerConfig cfg = quick(1);
    cfg.max_iterations = 300;
    cfg.general_tensors = true;
    const auto general = maximize_success(make_ocb(), cfg);
    EXPECT_LE(general.best_value, kQuantumBound + 1e-6);
    EXPECT_NEAR(success_probability(make_ocb(), general.best), general.best_value, 1e-9);
}

TEST(Optimizer, RejectsBadInput) {
    EXPECT_THROW(maximize_success(make_werner({0.9, 0.9}), quick()), std::invalid_argument);
    OptimizerConfig bad = quick();
    bad.restarts = 0;
    EXPECT_THROW(maximize_success(make_ocb(), bad), std::invalid_argument);
    bad = quick();
    bad.tolerance = -1;
    EXPECT_THROW(maximize_success(make_ocb(), bad), std::invalid_argument);
}

TEST(Certify, OcbAndWerner) {
    const auto ocb = certify_quantum_bound(make_ocb(), quick(8));
    EXPECT_NEAR(ocb.max_found, 0.853553, 1e-6);
    EXPECT_FALSE(ocb.violated);
    const auto werner = certify_quantum_bound(make_werner({0.9, 0.1}), quick(4));
    EXPECT_NEAR(werner.max_found, 0.75, 1e-6);
    EXPECT_FALSE(werner.violated);
}

TEST(ProofVectors, UnitNormsAndOrthogonality) {
    Rng rng(42);
    for (int k = 0; k < 30; ++k) {
        const ProcessMatrix w = random_valid_process(rng, k);
        const auto pv = proof_vectors(w, random_strategy(rng));
        EXPECT_NEAR(pv.norm_a, 1, 1e-9);
        EXPECT_NEAR(pv.norm_b, 1, 1e-9);
        EXPECT_NEAR(pv.norm_i, 1, 1e-9);
        EXPECT_NEAR(std::abs(pv.ab_inner), 0, 1e-9);
        EXPECT_LE(pv.ai_inner * pv.ai_inner + pv.bi_inner * pv.bi_inner, 1 + 1e-9);
    }
}

TEST(ProofVectors, OcbSaturation) {
    const auto pv = proof_vectors(make_ocb(), ocb_optimal_strategies());
    EXPECT_NEAR(pv.ai_inner, 1 / std::sqrt(2.0), 1e-6);
    EXPECT_NEAR(pv.bi_inner, 1 / std::sqrt(2.0), 1e-6);
}

TEST(ProofVectors, InnerProductsMatchCoefficientContractions) {
    // (a|i) = Tr[rho O_n O_r] = (e|n r), (b|i) = (d|m S).
    Rng rng(43);
    for (int k = 0; k < 10; ++k) {
        const ProcessMatrix w = random_valid_process(rng, k);
        const StrategyPair s = random_strategy(rng);
        const auto pv = proof_vectors(w, s);
        const auto c = ProcessCoefficients::from(w);
        EXPECT_NEAR(pv.ai_inner, s.alice.n[0].dot(c.e * s.bob.r), 1e-9);
        EXPECT_NEAR(pv.bi_inner, contract_pair_last(c.d, s.alice.m[0], s.bob.t * s.bob.o.transpose()), 1e-9);
    }
}

}  // namespace
}  // namespace pmx
