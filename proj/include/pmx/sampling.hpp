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

// Random instances for property checks and optimizer restarts.

#pragma once

#include <random>

#include "pmx/causal_game.hpp"

namespace pmx {

using Rng = std::mt19937_64;

/// Uniform on the sphere: a normalized Gaussian triple.
Vec3 random_unit_vector(Rng &rng);

/// Random measure-reprepare strategies with independent per-input Alice
/// vectors and uniformly random truth tables F, G.
StrategyPair random_strategy(Rng &rng);

/// Uniform point of the disk eta1^2 + eta2^2 <= 1.
WernerParams random_werner_params(Rng &rng);

/// 1/4 [I + s X] where X is a random combination of the allowed Pauli
/// terms and s is chosen so the result is positive semidefinite. Half of
/// the draws sit exactly on the boundary of the positive cone.
ProcessMatrix random_structured_process(Rng &rng);

/// Alternates Werner and structured draws.
ProcessMatrix random_valid_process(Rng &rng, size_t draw_index);

}  // namespace pmx
