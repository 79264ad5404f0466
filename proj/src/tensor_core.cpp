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

#include "pmx/tensor_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace pmx {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kSqrtClamp = 1e-10;

// Per-leg digits of a flat index, last leg fastest.
void unflatten(int flat, std::span<const int> dims, std::span<int> digits) {
    for (size_t k = dims.size(); k-- > 0;) {
        digits[k] = flat % dims[k];
        flat /= dims[k];
    }
}

int flatten(std::span<const int> digits, std::span<const int> dims) {
    int flat = 0;
    for (size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
    return flat;
}

std::vector<int> layout_dims(const SpaceLayout &layout) {
    std::vector<int> dims;
    for (const auto &leg : layout.legs()) dims.push_back(leg.dim);
    return dims;
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

}  // namespace

std::string_view to_string(Leg leg) {
    switch (leg) {
        case Leg::A1: return "A1";
        case Leg::A2: return "A2";
        case Leg::B1: return "B1";
        case Leg::B2: return "B2";
    }
    return "?";
}

Leg parse_leg(std::string_view text) {
    for (Leg leg : kAllLegs) {
        if (to_string(leg) == text) return leg;
    }
    throw std::invalid_argument("unknown leg label: " + std::string(text));
}

SpaceLayout::SpaceLayout(std::vector<LegDim> legs) : legs_(std::move(legs)) {
    std::sort(legs_.begin(), legs_.end(),
              [](const LegDim &a, const LegDim &b) { return a.label < b.label; });
    for (size_t k = 0; k < legs_.size(); ++k) {
        if (k > 0 && legs_[k].label == legs_[k - 1].label) {
            throw std::invalid_argument("duplicate leg label " + std::string(to_string(legs_[k].label)));
        }
        if (legs_[k].dim <= 0 || legs_[k].dim % 2 != 0) {
            throw std::invalid_argument("leg dimension must be a positive even integer");
        }
        total_dim_ *= legs_[k].dim;
    }
}

SpaceLayout SpaceLayout::qubits() { return uniform(2); }

SpaceLayout SpaceLayout::uniform(int dim) {
    return SpaceLayout({{Leg::A1, dim}, {Leg::A2, dim}, {Leg::B1, dim}, {Leg::B2, dim}});
}

bool SpaceLayout::contains(Leg leg) const {
    return std::any_of(legs_.begin(), legs_.end(), [leg](const LegDim &l) { return l.label == leg; });
}

size_t SpaceLayout::position(Leg leg) const {
    for (size_t k = 0; k < legs_.size(); ++k) {
        if (legs_[k].label == leg) return k;
    }
    throw std::invalid_argument("leg " + std::string(to_string(leg)) + " is not part of the layout");
}

int SpaceLayout::dim(Leg leg) const { return legs_[position(leg)].dim; }

bool SpaceLayout::operator==(const SpaceLayout &other) const {
    if (legs_.size() != other.legs_.size()) return false;
    for (size_t k = 0; k < legs_.size(); ++k) {
        if (legs_[k].label != other.legs_[k].label || legs_[k].dim != other.legs_[k].dim) return false;
    }
    return true;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

const ComplexMatrix &pauli(int index) {
    static const std::array<ComplexMatrix, 4> paulis = [] {
        using namespace std::complex_literals;
        std::array<ComplexMatrix, 4> p;
        for (auto &m : p) m = ComplexMatrix::Zero(2, 2);
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, -1i, 1i, 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    if (index < 0 || index > 3) throw std::out_of_range("Pauli index out of range");
    return paulis[index];
}

int pauli_index(char label) {
    switch (label) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
        default: throw std::invalid_argument(std::string("not a Pauli label: ") + label);
    }
}

char pauli_label(int index) {
    static constexpr char labels[] = {'I', 'X', 'Y', 'Z'};
    if (index < 0 || index > 3) throw std::out_of_range("Pauli index out of range");
    return labels[index];
}

ComplexMatrix pauli_string(std::string_view labels) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (char c : labels) out = kron(out, pauli(pauli_index(c)));
    return out;
}

Complex pauli_trace(const ComplexMatrix &m, std::span<const int> index) {
    const int k = static_cast<int>(index.size());
    const int total = 1 << k;
    if (m.rows() != total || m.cols() != total) throw std::invalid_argument("pauli_trace: matrix does not match string length");
    // Each Pauli string has one nonzero per row: P(r, r ^ flip) = phase(r).
    int flip = 0;
    for (int q = 0; q < k; ++q) {
        if (index[q] < 0 || index[q] > 3) throw std::out_of_range("Pauli index out of range");
        if (index[q] == 1 || index[q] == 2) flip |= 1 << (k - 1 - q);
    }
    Complex acc = 0;
    for (int r = 0; r < total; ++r) {
        Complex phase = 1;
        for (int q = 0; q < k; ++q) {
            const int bit = (r >> (k - 1 - q)) & 1;
            switch (index[q]) {
                case 2: phase *= bit ? Complex(0, 1) : Complex(0, -1); break;
                case 3: if (bit) phase = -phase; break;
                default: break;
            }
        }
        // Tr[m P] = sum_r P(r, c) m(c, r) with c = r ^ flip.
        acc += phase * m(r ^ flip, r);
    }
    return acc;
}

std::vector<ComplexMatrix> hs_basis(int d) {
    if (d <= 0) throw std::invalid_argument("basis dimension must be positive");
    if (d == 2) return {pauli(0), pauli(1), pauli(2), pauli(3)};

    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<size_t>(d) * d);
    basis.push_back(ComplexMatrix::Identity(d, d));
    // Gell-Mann matrices have Tr(g g) = 2; rescale to Tr = d.
    const double scale = std::sqrt(d / 2.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix sym = ComplexMatrix::Zero(d, d);
            sym(j, k) = scale;
            sym(k, j) = scale;
            basis.push_back(sym);
            ComplexMatrix anti = ComplexMatrix::Zero(d, d);
            anti(j, k) = Complex(0, -scale);
            anti(k, j) = Complex(0, scale);
            basis.push_back(anti);
        }
    }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix diag = ComplexMatrix::Zero(d, d);
        const double norm = scale * std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) diag(j, j) = norm;
        diag(l, l) = -l * norm;
        basis.push_back(diag);
    }
    return basis;
}

ComplexMatrix embed(const ComplexMatrix &op, std::span<const Leg> target_legs,
                    const SpaceLayout &layout) {
    require_square(op, "embed");
    const auto dims = layout_dims(layout);
    const size_t n = dims.size();

    std::vector<size_t> target_pos;
    int target_dim = 1;
    std::vector<bool> is_target(n, false);
    for (Leg leg : target_legs) {
        const size_t p = layout.position(leg);
        if (is_target[p]) throw std::invalid_argument("embed: leg listed twice");
        is_target[p] = true;
        target_pos.push_back(p);
        target_dim *= dims[p];
    }
    if (op.rows() != target_dim) throw std::invalid_argument("embed: operator dimension does not match target legs");

    const int total = layout.total_dim();
    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    std::vector<int> row_digits(n), col_digits(n);
    for (int r = 0; r < total; ++r) {
        unflatten(r, dims, row_digits);
        for (int c = 0; c < total; ++c) {
            unflatten(c, dims, col_digits);
            bool spectators_match = true;
            for (size_t k = 0; k < n; ++k) {
                if (!is_target[k] && row_digits[k] != col_digits[k]) {
                    spectators_match = false;
                    break;
                }
            }
            if (!spectators_match) continue;
            int op_r = 0, op_c = 0;
            for (size_t p : target_pos) {
                op_r = op_r * dims[p] + row_digits[p];
                op_c = op_c * dims[p] + col_digits[p];
            }
            out(r, c) = op(op_r, op_c);
        }
    }
    return out;
}

SpaceLayout reduced_layout(const SpaceLayout &layout, std::span<const Leg> traced_legs) {
    std::vector<LegDim> kept;
    for (const auto &leg : layout.legs()) {
        if (std::find(traced_legs.begin(), traced_legs.end(), leg.label) == traced_legs.end()) {
            kept.push_back(leg);
        }
    }
    return SpaceLayout(std::move(kept));
}

ComplexMatrix partial_trace(const ComplexMatrix &m, const SpaceLayout &layout,
                            std::span<const Leg> traced_legs) {
    require_square(m, "partial_trace");
    if (m.rows() != layout.total_dim()) throw std::invalid_argument("partial_trace: matrix does not match layout");
    const auto dims = layout_dims(layout);
    const size_t n = dims.size();

    std::vector<bool> traced(n, false);
    for (Leg leg : traced_legs) traced[layout.position(leg)] = true;

    std::vector<int> kept_dims, traced_dims;
    for (size_t k = 0; k < n; ++k) (traced[k] ? traced_dims : kept_dims).push_back(dims[k]);
    int kept_total = 1, traced_total = 1;
    for (int d : kept_dims) kept_total *= d;
    for (int d : traced_dims) traced_total *= d;

    ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);
    std::vector<int> kr(kept_dims.size()), kc(kept_dims.size()), kt(traced_dims.size());
    std::vector<int> full_r(n), full_c(n);
    for (int r = 0; r < kept_total; ++r) {
        unflatten(r, kept_dims, kr);
        for (int c = 0; c < kept_total; ++c) {
            unflatten(c, kept_dims, kc);
            Complex acc = 0;
            for (int t = 0; t < traced_total; ++t) {
                unflatten(t, traced_dims, kt);
                size_t ik = 0, it = 0;
                for (size_t k = 0; k < n; ++k) {
                    if (traced[k]) {
                        full_r[k] = full_c[k] = kt[it++];
                    } else {
                        full_r[k] = kr[ik];
                        full_c[k] = kc[ik];
                        ++ik;
                    }
                }
                acc += m(flatten(full_r, dims), flatten(full_c, dims));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

ComplexMatrix hs_element(std::span<const int> index, const SpaceLayout &layout) {
    if (index.size() != layout.num_legs()) throw std::invalid_argument("basis index has wrong number of legs");
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (size_t k = 0; k < index.size(); ++k) {
        const int d = layout.legs()[k].dim;
        if (index[k] < 0 || index[k] >= d * d) throw std::out_of_range("basis index out of range");
        out = kron(out, hs_basis(d)[index[k]]);
    }
    return out;
}

std::vector<HsTerm> hs_decompose(const ComplexMatrix &m, const SpaceLayout &layout, double drop_tol) {
    require_square(m, "hs_decompose");
    if (m.rows() != layout.total_dim()) throw std::invalid_argument("hs_decompose: matrix does not match layout");

    const size_t n = layout.num_legs();
    std::vector<int> dims, counts;
    for (const auto &leg : layout.legs()) {
        dims.push_back(leg.dim);
        counts.push_back(leg.dim * leg.dim);
    }
    const int total = layout.total_dim();

    // Regroup m(i, j) as a tensor over per-leg pairs p_k = i_k d_k + j_k,
    // then turn each pair into a basis index with one mode product per leg:
    // c(mu) = sum_p S_mu[j, i] t(p). The tensor keeps D^2 entries throughout.
    std::vector<Complex> t(static_cast<size_t>(total) * total);
    std::vector<int> row(n), col(n), pair(n);
    for (int i = 0; i < total; ++i) {
        unflatten(i, dims, row);
        for (int j = 0; j < total; ++j) {
            unflatten(j, dims, col);
            for (size_t k = 0; k < n; ++k) pair[k] = row[k] * dims[k] + col[k];
            t[flatten(pair, counts)] = m(i, j);
        }
    }

    std::vector<Complex> next(t.size());
    size_t inner = t.size();
    for (size_t k = 0; k < n; ++k) {
        const auto basis = hs_basis(dims[k]);
        const size_t s = static_cast<size_t>(counts[k]);
        inner /= s;
        const size_t outer = t.size() / (s * inner);
        // L(mu, i d + j) = S_mu(j, i)
        ComplexMatrix L(s, s);
        for (size_t mu = 0; mu < s; ++mu) {
            for (int i = 0; i < dims[k]; ++i)
                for (int j = 0; j < dims[k]; ++j) L(mu, i * dims[k] + j) = basis[mu](j, i);
        }
        for (size_t o = 0; o < outer; ++o) {
            for (size_t mu = 0; mu < s; ++mu) {
                Complex *dst = &next[(o * s + mu) * inner];
                std::fill(dst, dst + inner, Complex(0));
                for (size_t p = 0; p < s; ++p) {
                    const Complex w = L(mu, p);
                    if (w == Complex(0)) continue;
                    const Complex *src = &t[(o * s + p) * inner];
                    for (size_t q = 0; q < inner; ++q) dst[q] += w * src[q];
                }
            }
        }
        t.swap(next);
    }

    std::vector<HsTerm> terms;
    std::vector<int> index(n);
    for (size_t flat = 0; flat < t.size(); ++flat) {
        const Complex coeff = t[flat] / static_cast<double>(total);
        if (std::abs(coeff) <= drop_tol) continue;
        unflatten(static_cast<int>(flat), counts, index);
        terms.push_back({index, coeff});
    }
    return terms;
}

ComplexMatrix hs_compose(std::span<const HsTerm> terms, const SpaceLayout &layout) {
    const int total = layout.total_dim();
    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    for (const auto &term : terms) out += term.coeff * hs_element(term.index, layout);
    return out;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix &m) {
    require_square(m, "hermitian_eigensystem");
    if (m.size() == 0) return {Eigen::VectorXd(), ComplexMatrix()};
    if (!is_hermitian(m, kHermitianTol)) throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigensystem: solver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    const EigenSystem es = hermitian_eigensystem(m);
    Eigen::VectorXd roots(es.values.size());
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
        const double lambda = es.values[k];
        if (lambda < -kSqrtClamp) throw std::domain_error("psd_sqrt: matrix has a negative eigenvalue");
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    return es.vectors * roots.asDiagonal() * es.vectors.adjoint();
}

bool is_psd(const ComplexMatrix &m, double tol) {
    if (!is_hermitian(m, kHermitianTol)) return false;
    const EigenSystem es = hermitian_eigensystem(m);
    return es.values.size() == 0 || es.values[0] >= -tol;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("hs_inner: shape mismatch");
    return (a.conjugate().array() * b.array()).sum();
}

}  // namespace pmx
