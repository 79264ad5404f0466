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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmx/tensor_core.hpp"

namespace pmx {

inline constexpr double kChannelTol = 1e-9;

/// A linear map in Choi-Jamiolkowski form,
///
///   M = [ (id (x) E)(|phi+><phi+|) ]^T,   |phi+> = sum_j |jj>  (unnormalized),
///
/// stored with the input leg first and the output leg second. The overall
/// transpose is taken in the computational basis.
class CjOperator {
   public:
    CjOperator(ComplexMatrix matrix, Leg in_leg, int in_dim, Leg out_leg, int out_dim);

    const ComplexMatrix &matrix() const { return matrix_; }
    Leg in_leg() const { return in_leg_; }
    Leg out_leg() const { return out_leg_; }
    int in_dim() const { return in_dim_; }
    int out_dim() const { return out_dim_; }

    /// Two-leg layout (in, out). Only valid for even dimensions.
    SpaceLayout layout() const;

   private:
    ComplexMatrix matrix_;
    Leg in_leg_;
    Leg out_leg_;
    int in_dim_;
    int out_dim_;
};

struct Instrument {
    std::vector<std::pair<std::string, CjOperator>> outcomes;
};

/// Each Kraus operator must be out_dim x in_dim.
CjOperator choi_from_kraus(std::span<const ComplexMatrix> kraus, int in_dim, int out_dim,
                           Leg in_leg = Leg::A1, Leg out_leg = Leg::A2);

/// E(rho) = Tr_in[(rho^T (x) I) M^T].
ComplexMatrix apply_cj(const CjOperator &op, const ComplexMatrix &rho);

/// Sum over out of the CJ matrix, as an in_dim x in_dim matrix.
ComplexMatrix trace_out_output(const CjOperator &op);

bool is_cp(const CjOperator &op, double tol = kChannelTol);
bool is_tp(const CjOperator &op, double tol = kChannelTol);

/// All elements CP and their sum trace preserving.
bool instrument_valid(const Instrument &inst, double tol = kChannelTol);

}  // namespace pmx
