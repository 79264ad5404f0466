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

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace pmx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Subsystem labels. Declaration order is the canonical tensor-leg order.
enum class Leg { A1 = 0, A2 = 1, B1 = 2, B2 = 3 };

inline constexpr Leg kAllLegs[] = {Leg::A1, Leg::A2, Leg::B1, Leg::B2};

std::string_view to_string(Leg leg);
Leg parse_leg(std::string_view text);

struct LegDim {
    Leg label;
    int dim;
};

/// Ordered set of labeled subsystems. Legs are kept in canonical order
/// (A1, A2, B1, B2) no matter how they were supplied.
class SpaceLayout {
   public:
    explicit SpaceLayout(std::vector<LegDim> legs);

    /// A1, A2, B1, B2 all two-dimensional.
    static SpaceLayout qubits();
    /// All four legs with the given dimension.
    static SpaceLayout uniform(int dim);

    const std::vector<LegDim> &legs() const { return legs_; }
    size_t num_legs() const { return legs_.size(); }
    int total_dim() const { return total_dim_; }

    bool contains(Leg leg) const;
    int dim(Leg leg) const;
    /// Position of `leg` in the layout; throws if absent.
    size_t position(Leg leg) const;

    bool operator==(const SpaceLayout &other) const;

   private:
    std::vector<LegDim> legs_;
    int total_dim_ = 1;
};

/// One product-basis element sigma_{index[0]} (x) ... (x) sigma_{index[k]},
/// with one basis index per layout leg (0 is the identity).
struct HsTerm {
    std::vector<int> index;
    Complex coeff;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// The single-qubit Pauli matrices, indexed 0..3 as I, X, Y, Z.
const ComplexMatrix &pauli(int index);
/// Parses one of "I", "X", "Y", "Z".
int pauli_index(char label);
char pauli_label(int index);
/// Kronecker product of Paulis given as a string such as "IZZI".
ComplexMatrix pauli_string(std::string_view labels);

/// Tr[m P] for the Pauli string P with per-qubit indices `index`, without
/// forming P. `m` must be 2^k x 2^k with k = index.size().
Complex pauli_trace(const ComplexMatrix &m, std::span<const int> index);

/// Hermitian operator basis for a d-dimensional system with
/// Tr(s_mu s_nu) = d delta_{mu nu}, s_0 = I and Tr s_j = 0 for j > 0.
/// d = 2 gives (I, X, Y, Z); larger d uses rescaled generalized Gell-Mann
/// matrices.
std::vector<ComplexMatrix> hs_basis(int d);

/// Lifts `op`, acting on `target_legs` in the given order, to the full
/// layout by tensoring with identities.
ComplexMatrix embed(const ComplexMatrix &op, std::span<const Leg> target_legs,
                    const SpaceLayout &layout);

ComplexMatrix partial_trace(const ComplexMatrix &m, const SpaceLayout &layout,
                            std::span<const Leg> traced_legs);

/// Layout left behind after tracing out `traced_legs`.
SpaceLayout reduced_layout(const SpaceLayout &layout, std::span<const Leg> traced_legs);

/// Product-basis element for the given per-leg indices.
ComplexMatrix hs_element(std::span<const int> index, const SpaceLayout &layout);

/// Expansion coefficients Tr[m S_mu] / D over the product basis. Terms with
/// |coeff| <= drop_tol are omitted.
std::vector<HsTerm> hs_decompose(const ComplexMatrix &m, const SpaceLayout &layout,
                                 double drop_tol = 1e-14);

ComplexMatrix hs_compose(std::span<const HsTerm> terms, const SpaceLayout &layout);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    ComplexMatrix vectors;   // columns
};

bool is_hermitian(const ComplexMatrix &m, double tol = 1e-12);

EigenSystem hermitian_eigensystem(const ComplexMatrix &m);

/// Principal square root. Eigenvalues in [-1e-10, 0) are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

bool is_psd(const ComplexMatrix &m, double tol);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace pmx
