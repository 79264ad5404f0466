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

// Maximisation of the game's success probability over the restricted
// strategy class, for a fixed process.
//
// After averaging over the hidden bits the success probability is
//
//   p = 1/2 + 1/8 [ sum_b s_b X_b + sum_a s_a Y_a ]
//
// where, for each b, X_b is (c|m o) when G(., b) ignores y and (d|m S)
// otherwise, and for each a, Y_a is (e|n r) when F(., a) ignores x and
// (f|T r) otherwise. s_a, s_b are the signs fixed by the truth tables.
// Every (F, G) pair is enumerated; the continuous parameters are spherical
// angles of the unit vectors m, n, r, t, o, polished by Nelder-Mead from
// random starts.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmx/causal_game.hpp"

namespace pmx {

inline const double kQuantumBound = (2.0 + std::sqrt(2.0)) / 4.0;
inline constexpr double kCausalBound = 0.75;

struct OptimizerConfig {
    int restarts = 64;  // per (F, G) pair
    int max_iterations = 2000;
    double tolerance = 1e-10;
    std::uint64_t seed = 42;
    /// Free 3x3 correlation tensors instead of T = m n^T, S = t o^T.
    /// Candidates failing O^2 = I or complete positivity are rejected.
    bool general_tensors = false;
};

/// Which terms carry the two guesses: Bob's guess of a goes through Alice's
/// local output vector n or her correlation tensor T; Alice's guess of b
/// goes through Bob's output vector o or his correlation tensor S.
enum class Branch { LocalLocal, LocalCorrelated, CorrelatedLocal, CorrelatedCorrelated };

/// "n.r|m.o", "n.r|m.S", "T.r|m.o", "T.r|m.S".
std::string_view to_string(Branch branch);
Branch branch_of(const BooleanTable &F, const BooleanTable &G);

struct OptimizationResult {
    double best_value = 0;
    StrategyPair best;
    Branch branch = Branch::LocalLocal;
    unsigned f_mask = 0;
    unsigned g_mask = 0;
    int best_restart = 0;
    /// Per restart index, the best value over all (F, G) pairs.
    std::vector<double> restart_bests;
    long long evaluations = 0;
};

/// Throws std::invalid_argument if `w` fails validate_process or the
/// config is not positive. Tasks run under OpenMP; ties go to the lowest
/// (F, G, restart) index, so the result matches maximize_success_serial.
OptimizationResult maximize_success(const ProcessMatrix &w, const OptimizerConfig &cfg);

/// Single-threaded reference with the same task order and tie-breaking.
OptimizationResult maximize_success_serial(const ProcessMatrix &w, const OptimizerConfig &cfg);

struct CertReport {
    double max_found = 0;
    double bound = kQuantumBound;
    bool violated = false;
};

CertReport certify_quantum_bound(const ProcessMatrix &w, const OptimizerConfig &cfg);

/// With rho = W / (d_A2 d_B2):
///   a = (I (x) O_n (x) O_r (x) I) sqrt(rho)
///   b = (O_m (x) I (x) O_S) sqrt(rho)
///   i = sqrt(rho)
/// under (X|Y) = Tr(X^dagger Y). Uses Alice's a = 0 vectors and Bob's
/// sending tensor S.
struct ProofVectors {
    double norm_a = 0;
    double norm_b = 0;
    double norm_i = 0;
    Complex ab_inner = 0;
    double ai_inner = 0;
    double bi_inner = 0;
};

ProofVectors proof_vectors(const ProcessMatrix &w, const StrategyPair &s);

}  // namespace pmx
