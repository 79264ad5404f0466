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

#include <array>
#include <string>
#include <vector>

#include "pmx/tensor_core.hpp"

namespace pmx {

inline constexpr double kProcessTol = 1e-9;

/// Bipartite process operator W on A1 (x) A2 (x) B1 (x) B2.
class ProcessMatrix {
   public:
    ProcessMatrix(ComplexMatrix matrix, SpaceLayout layout);

    const ComplexMatrix &matrix() const { return matrix_; }
    const SpaceLayout &layout() const { return layout_; }

    /// W / (d_A2 d_B2), a unit-trace operator for valid processes.
    ComplexMatrix normalized_state() const;

   private:
    ComplexMatrix matrix_;
    SpaceLayout layout_;
};

/// Set of legs on which a product-basis term acts non-trivially.
class TermType {
   public:
    constexpr TermType() = default;
    constexpr explicit TermType(unsigned mask) : mask_(mask & 0xFu) {}
    static TermType of(std::initializer_list<Leg> legs);

    constexpr unsigned mask() const { return mask_; }
    constexpr bool has(Leg leg) const { return (mask_ >> static_cast<unsigned>(leg)) & 1u; }
    /// "A1B2"-style name; the identity type is "I".
    std::string name() const;

    constexpr bool operator==(const TermType &) const = default;

   private:
    unsigned mask_ = 0;
};

/// Term types that may appear in a bipartite process: identity, the
/// B-to-A signalling types A1B2 and A1B1B2, the A-to-B signalling types
/// A2B1 and A1A2B1, and the no-signalling types A1, B1, A1B1.
const std::array<TermType, 8> &allowed_term_types();
bool is_allowed_term_type(TermType type);

struct ForbiddenTerm {
    TermType type;
    std::vector<int> index;
    double coeff;
};

struct ValidityReport {
    bool psd = false;
    bool trace_ok = false;
    double min_eigenvalue = 0;
    double trace = 0;
    std::vector<ForbiddenTerm> forbidden_terms;

    bool valid() const { return psd && trace_ok && forbidden_terms.empty(); }
};

/// Throws if `w` is not over all four legs.
ValidityReport validate_process(const ProcessMatrix &w, double tol = kProcessTol);

struct WernerParams {
    double eta1 = 0;
    double eta2 = 0;
};

enum class SignalDirection { AToB, BToA };

/// 1/4 [I + (1/sqrt2)(Z^{A2} Z^{B1} + Z^{A1} X^{B1} Z^{B2})] on four qubits.
ProcessMatrix make_ocb();
/// I/4 on four qubits.
ProcessMatrix make_noise();
/// 1/4 [I + eta1 Z^{A2} Z^{B1} + eta2 Z^{A1} X^{B1} Z^{B2}]. Not validated.
ProcessMatrix make_werner(WernerParams p);
/// A-to-B: 1/4 [I + sign Z^{A2} Z^{B1}];  B-to-A: 1/4 [I + sign Z^{A1} X^{B1} Z^{B2}].
ProcessMatrix make_causal_channel(SignalDirection direction, int sign);

/// Squared distance of (eta1, eta2) to the set of mixtures
/// (lambda e, (1 - lambda) d) with lambda in [0,1] and |e|, |d| <= 1.
/// Coarse 101^3 grid, then a bounded Nelder-Mead polish.
double geometric_distance_werner(WernerParams p);

/// |eta1| + |eta2| <= 1 + 1e-12.
bool is_causally_separable_werner(WernerParams p);

/// Throws std::invalid_argument unless eta1^2 + eta2^2 <= 1 (+1e-12).
void require_valid_werner(WernerParams p);

}  // namespace pmx
