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

#include "pmx/channels.hpp"

#include <stdexcept>

namespace pmx {

CjOperator::CjOperator(ComplexMatrix matrix, Leg in_leg, int in_dim, Leg out_leg, int out_dim)
    : matrix_(std::move(matrix)), in_leg_(in_leg), out_leg_(out_leg), in_dim_(in_dim), out_dim_(out_dim) {
    if (in_dim <= 0 || out_dim <= 0) throw std::invalid_argument("CjOperator: dimensions must be positive");
    if (in_leg == out_leg) throw std::invalid_argument("CjOperator: input and output legs must differ");
    const Eigen::Index n = static_cast<Eigen::Index>(in_dim) * out_dim;
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw std::invalid_argument("CjOperator: matrix is not (in_dim*out_dim) square");
    }
}

SpaceLayout CjOperator::layout() const { return SpaceLayout({{in_leg_, in_dim_}, {out_leg_, out_dim_}}); }

CjOperator choi_from_kraus(std::span<const ComplexMatrix> kraus, int in_dim, int out_dim, Leg in_leg,
                           Leg out_leg) {
    const int n = in_dim * out_dim;
    ComplexMatrix choi = ComplexMatrix::Zero(n, n);
    for (const auto &k : kraus) {
        if (k.rows() != out_dim || k.cols() != in_dim) {
            throw std::invalid_argument("choi_from_kraus: Kraus operator must be out_dim x in_dim");
        }
        // (I (x) K)|phi+> = sum_j |j> (x) K|j>, flattened as j*out_dim + o.
        Eigen::VectorXcd v(n);
        for (int j = 0; j < in_dim; ++j) v.segment(j * out_dim, out_dim) = k.col(j);
        choi += v * v.adjoint();
    }
    return CjOperator(choi.transpose(), in_leg, in_dim, out_leg, out_dim);
}

ComplexMatrix apply_cj(const CjOperator &op, const ComplexMatrix &rho) {
    const int din = op.in_dim();
    const int dout = op.out_dim();
    if (rho.rows() != din || rho.cols() != din) throw std::invalid_argument("apply_cj: state does not match input leg");
    // With C = M^T = sum_{jk} |j><k| (x) E(|j><k|):  E(rho) = sum_{jk} rho_jk E(|j><k|).
    const ComplexMatrix choi = op.matrix().transpose();
    ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
    for (int j = 0; j < din; ++j) {
        for (int k = 0; k < din; ++k) {
            out += rho(j, k) * choi.block(j * dout, k * dout, dout, dout);
        }
    }
    return out;
}

ComplexMatrix trace_out_output(const CjOperator &op) {
    const int din = op.in_dim();
    const int dout = op.out_dim();
    ComplexMatrix out(din, din);
    for (int j = 0; j < din; ++j) {
        for (int k = 0; k < din; ++k) out(j, k) = op.matrix().block(j * dout, k * dout, dout, dout).trace();
    }
    return out;
}

bool is_cp(const CjOperator &op, double tol) { return is_psd(op.matrix(), tol); }

bool is_tp(const CjOperator &op, double tol) {
    const ComplexMatrix reduced = trace_out_output(op);
    return (reduced - ComplexMatrix::Identity(op.in_dim(), op.in_dim())).cwiseAbs().maxCoeff() <= tol;
}

bool instrument_valid(const Instrument &inst, double tol) {
    if (inst.outcomes.empty()) return false;
    const CjOperator &first = inst.outcomes.front().second;
    ComplexMatrix sum = ComplexMatrix::Zero(first.matrix().rows(), first.matrix().cols());
    for (const auto &[label, op] : inst.outcomes) {
        if (op.in_dim() != first.in_dim() || op.out_dim() != first.out_dim() || op.in_leg() != first.in_leg() ||
            op.out_leg() != first.out_leg()) {
            return false;
        }
        if (!is_cp(op, tol)) return false;
        sum += op.matrix();
    }
    return is_tp(CjOperator(sum, first.in_leg(), first.in_dim(), first.out_leg(), first.out_dim()), tol);
}

}  // namespace pmx
