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

// JSON documents for processes, strategies and results.
//
// Process:
//   {"dims": [dA1, dA2, dB1, dB2],
//    "pauli_terms": [{"labels": ["I","Z","Z","I"], "coeff": 0.17}, ...]}
// or, for any dimensions,
//   {"dims": [...], "dense": [[re, im], ...]}   (row-major, D*D entries)
// W is the plain sum coeff * P over the listed Pauli strings.
//
// Strategy:
//   {"alice": {"mode": "measure-reprepare", "m": [x,y,z], "n": [x,y,z],
//              "T": [[...],[...],[...]], "F": [f00, f10, f01, f11]},
//    "bob":   {"mode": "measure-reprepare", "r": [...], "t": [...],
//              "o": [...], "S": [[...]], "G": [g00, g10, g01, g11],
//              "rho_b2": [[[re,im],[re,im]],[[re,im],[re,im]]]}}
// Alice's m, n and T may also be given per input a as a two-element list.
// T and S are only required in "correlated" mode; rho_b2 defaults to I/2.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "pmx/bound_optimizer.hpp"
#include "pmx/causal_game.hpp"
#include "pmx/process_matrices.hpp"
#include "json.hpp"

namespace pmx {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent document.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// pauli_terms form when every leg is a qubit, dense otherwise.
Json process_to_json(const ProcessMatrix &w);
ProcessMatrix process_from_json(const Json &doc);

Json strategy_to_json(const StrategyPair &s);
/// Structural checks only; call validate_strategy for physical ones.
StrategyPair strategy_from_json(const Json &doc);

Json report_to_json(const ValidityReport &report);
Json distribution_to_json(const JointDistribution &p);
Json optimization_to_json(const OptimizationResult &result);

Json read_json_file(const std::filesystem::path &path);
/// Pretty-printed with a trailing newline. Throws std::runtime_error if the
/// file cannot be written.
void write_json_file(const std::filesystem::path &path, const Json &doc);

}  // namespace pmx
