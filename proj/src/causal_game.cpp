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

#include "pmx/causal_game.hpp"

#include <cmath>
#include <optional>

namespace pmx {

namespace {

constexpr double kUnitTol = 1e-9;

double sign_of(int bit) { return (bit & 1) ? -1.0 : 1.0; }

ComplexMatrix bloch_operator(const Vec3 &v) {
    return v[0] * pauli(1) + v[1] * pauli(2) + v[2] * pauli(3);
}

ComplexMatrix correlation_operator(const Mat3 &t) {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (t(i, j) != 0.0) out += t(i, j) * kron(pauli(i + 1), pauli(j + 1));
        }
    }
    return out;
}

// (1/4)[I + s_in (u|s) (x) I + s_out I (x) (w|s) + s_in s_out (C|s s)]
ComplexMatrix encode_decode_map(const Vec3 &measured, const Vec3 &prepared, const Mat3 &corr, double s_in,
                                double s_out) {
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    ComplexMatrix m = ComplexMatrix::Identity(4, 4);
    m += s_in * kron(bloch_operator(measured), id2);
    m += s_out * kron(id2, bloch_operator(prepared));
    m += s_in * s_out * correlation_operator(corr);
    return 0.25 * m;
}

void require_unit(const Vec3 &v, const char *name) {
    if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTol) {
        throw StrategyError(std::string(name) + " must be a unit vector");
    }
}

void require_unit(const Mat3 &t, const char *name) {
    if (!t.allFinite() || std::abs(t.norm() - 1.0) > kUnitTol) {
        throw StrategyError(std::string(name) + " must have unit Frobenius norm");
    }
}

void require_bit(int bit, const char *name) {
    if (bit != 0 && bit != 1) throw std::invalid_argument(std::string(name) + " must be 0 or 1");
}

void require_qubit_state(const ComplexMatrix &rho) {
    if (rho.rows() != 2 || rho.cols() != 2 || !is_hermitian(rho, 1e-10) ||
        std::abs(rho.trace() - Complex(1.0)) > 1e-9 || !is_psd(rho, kChannelTol)) {
        throw StrategyError("rho_b2 must be a qubit density matrix");
    }
}

void require_qubit_process(const ProcessMatrix &w) {
    if (!(w.layout() == SpaceLayout::qubits())) {
        throw std::invalid_argument("the causal game is defined on the four-qubit layout");
    }
}

}  // namespace

std::string_view to_string(MapMode mode) {
    return mode == MapMode::MeasureReprepare ? "measure-reprepare" : "correlated";
}

MapMode parse_map_mode(std::string_view text) {
    if (text == "measure-reprepare") return MapMode::MeasureReprepare;
    if (text == "correlated") return MapMode::Correlated;
    throw std::invalid_argument("unknown map mode: " + std::string(text));
}

Mat3 AliceStrategy::correlation(int a) const {
    return mode == MapMode::MeasureReprepare ? Mat3(m[a] * n[a].transpose()) : T[a];
}

Mat3 BobStrategy::correlation() const {
    return mode == MapMode::MeasureReprepare ? Mat3(t * o.transpose()) : S;
}

StrategyPair ocb_optimal_strategies() {
    StrategyPair s;
    s.alice.mode = MapMode::MeasureReprepare;
    s.alice.m = {Vec3::UnitZ(), Vec3::UnitZ()};
    s.alice.n = {Vec3::UnitZ(), Vec3::UnitZ()};
    s.alice.F = BooleanTable({0, 0, 1, 1});  // F(x, a) = a
    s.bob.r = Vec3::UnitZ();
    s.bob.rho_b2 = ComplexMatrix::Identity(2, 2) * 0.5;
    s.bob.mode = MapMode::MeasureReprepare;
    s.bob.t = Vec3::UnitX();
    s.bob.o = Vec3::UnitZ();
    s.bob.G = BooleanTable({0, 1, 1, 0});  // G(y, b) = y xor b
    return s;
}

CjOperator alice_cj(const AliceStrategy &s, int x, int a) {
    require_bit(x, "x");
    require_bit(a, "a");
    require_unit(s.m[a], "alice.m");
    require_unit(s.n[a], "alice.n");
    const Mat3 corr = s.correlation(a);
    require_unit(corr, "alice.T");
    CjOperator op(encode_decode_map(s.m[a], s.n[a], corr, sign_of(x), sign_of(s.F(x, a))), Leg::A1, 2, Leg::A2, 2);
    if (!is_cp(op)) throw StrategyError("Alice's map is not completely positive");
    return op;
}

CjOperator bob_cj(const BobStrategy &s, int y, int b, int bprime) {
    require_bit(y, "y");
    require_bit(b, "b");
    require_bit(bprime, "b'");
    if (bprime == 1) {
        require_unit(s.r, "bob.r");
        require_qubit_state(s.rho_b2);
        const ComplexMatrix measure = 0.5 * (ComplexMatrix::Identity(2, 2) + sign_of(y) * bloch_operator(s.r));
        return CjOperator(kron(measure, s.rho_b2), Leg::B1, 2, Leg::B2, 2);
    }
    require_unit(s.t, "bob.t");
    require_unit(s.o, "bob.o");
    const Mat3 corr = s.correlation();
    require_unit(corr, "bob.S");
    CjOperator op(encode_decode_map(s.t, s.o, corr, sign_of(y), sign_of(s.G(y, b))), Leg::B1, 2, Leg::B2, 2);
    if (!is_cp(op)) throw StrategyError("Bob's map is not completely positive");
    return op;
}

void validate_strategy(const StrategyPair &s) {
    for (int a = 0; a < 2; ++a) {
        for (int x = 0; x < 2; ++x) alice_cj(s.alice, x, a);
    }
    for (int b = 0; b < 2; ++b) {
        for (int y = 0; y < 2; ++y) {
            bob_cj(s.bob, y, b, 0);
            bob_cj(s.bob, y, b, 1);
        }
    }
}

double joint_probability(const ProcessMatrix &w, const CjOperator &alice, const CjOperator &bob) {
    const SpaceLayout &layout = w.layout();
    if (alice.in_leg() != Leg::A1 || alice.out_leg() != Leg::A2 || bob.in_leg() != Leg::B1 ||
        bob.out_leg() != Leg::B2) {
        throw std::invalid_argument("joint_probability: expected maps A1->A2 and B1->B2");
    }
    if (alice.in_dim() != layout.dim(Leg::A1) || alice.out_dim() != layout.dim(Leg::A2) ||
        bob.in_dim() != layout.dim(Leg::B1) || bob.out_dim() != layout.dim(Leg::B2)) {
        throw std::invalid_argument("joint_probability: map dimensions do not match the process");
    }
    // Tr[W (A (x) B)] = sum W_{(i,k),(j,l)} A_{j,i} B_{l,k}
    const ComplexMatrix &W = w.matrix();
    const ComplexMatrix &A = alice.matrix();
    const ComplexMatrix &B = bob.matrix();
    const Eigen::Index da = A.rows(), db = B.rows();
    Complex acc = 0;
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            const Complex aji = A(j, i);
            if (aji == Complex(0)) continue;
            Complex inner = 0;
            for (Eigen::Index k = 0; k < db; ++k) {
                for (Eigen::Index l = 0; l < db; ++l) inner += W(i * db + k, j * db + l) * B(l, k);
            }
            acc += aji * inner;
        }
    }
    return acc.real();
}

JointDistribution joint_distribution(const ProcessMatrix &w, const StrategyPair &s) {
    require_qubit_process(w);
    std::array<std::array<std::optional<CjOperator>, 2>, 2> xi;  // [x][a]
    for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) xi[x][a] = alice_cj(s.alice, x, a);
    }
    JointDistribution p;
    for (int bp = 0; bp < 2; ++bp) {
        for (int b = 0; b < 2; ++b) {
            for (int y = 0; y < 2; ++y) {
                const CjOperator eta = bob_cj(s.bob, y, b, bp);
                for (int x = 0; x < 2; ++x) {
                    for (int a = 0; a < 2; ++a) p.at(x, y, a, b, bp) = joint_probability(w, *xi[x][a], eta);
                }
            }
        }
    }
    return p;
}

GuessProbabilities guess_probabilities(const JointDistribution &p) {
    GuessProbabilities g;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int other = 0; other < 2; ++other) {
                g.alice_guesses_b += 0.25 * p.at(b, other, a, b, 0);
                g.bob_guesses_a += 0.25 * p.at(other, a, a, b, 1);
            }
        }
    }
    return g;
}

double success_probability(const ProcessMatrix &w, const StrategyPair &s) {
    return guess_probabilities(joint_distribution(w, s)).success();
}

ProcessCoefficients ProcessCoefficients::from(const ProcessMatrix &w) {
    require_qubit_process(w);
    const ComplexMatrix &m = w.matrix();
    // W = 1/4 [I + sum coeff P]  =>  coeff = Tr[W P] / 4.
    auto coeff = [&](int a1, int a2, int b1, int b2) {
        const int index[4] = {a1, a2, b1, b2};
        return pauli_trace(m, index).real() / 4.0;
    };
    ProcessCoefficients out;
    for (int i = 0; i < 3; ++i) {
        out.v[i] = coeff(i + 1, 0, 0, 0);
        out.x[i] = coeff(0, 0, i + 1, 0);
        for (int j = 0; j < 3; ++j) {
            out.c(i, j) = coeff(i + 1, 0, 0, j + 1);
            out.e(i, j) = coeff(0, i + 1, j + 1, 0);
            out.g(i, j) = coeff(i + 1, 0, j + 1, 0);
            for (int k = 0; k < 3; ++k) {
                out.d[9 * i + 3 * j + k] = coeff(i + 1, 0, j + 1, k + 1);
                out.f[9 * i + 3 * j + k] = coeff(i + 1, j + 1, k + 1, 0);
            }
        }
    }
    return out;
}

double contract_pair_first(const Tensor3 &t, const Mat3 &a, const Vec3 &b) {
    double acc = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) acc += t[9 * i + 3 * j + k] * a(i, j) * b[k];
        }
    }
    return acc;
}

double contract_pair_last(const Tensor3 &t, const Vec3 &a, const Mat3 &b) {
    double acc = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) acc += t[9 * i + 3 * j + k] * a[i] * b(j, k);
        }
    }
    return acc;
}

GuessProbabilities analytic_probabilities(const ProcessCoefficients &w, const StrategyPair &s) {
    validate_strategy(s);
    const Mat3 bob_corr = s.bob.correlation();
    GuessProbabilities g;
    for (int a = 0; a < 2; ++a) {
        const Vec3 &m = s.alice.m[a];
        const Vec3 &n = s.alice.n[a];
        for (int b = 0; b < 2; ++b) {
            // b' = 0: summing Bob's outcome y leaves either (-1)^G (o|s^B2) or
            // (-1)^(G xor y) (S|s^B1 s^B2), depending on whether G sees y.
            const double sb = sign_of(b + s.bob.G(0, b));
            const double third_a = s.bob.G.constant_in_first(b) ? sb * m.dot(w.c * s.bob.o)
                                                                 : sb * contract_pair_last(w.d, m, bob_corr);
            g.alice_guesses_b += 0.25 * 0.5 * (1.0 + sign_of(b) * w.v.dot(m) + third_a);

            // b' = 1: summing Alice's outcome x, likewise for F.
            const double sa = sign_of(a + s.alice.F(0, a));
            const double third_b = s.alice.F.constant_in_first(a)
                                       ? sa * n.dot(w.e * s.bob.r)
                                       : sa * contract_pair_first(w.f, s.alice.correlation(a), s.bob.r);
            g.bob_guesses_a += 0.25 * 0.5 * (1.0 + sign_of(a) * w.x.dot(s.bob.r) + third_b);
        }
    }
    return g;
}

GuessProbabilities analytic_probabilities(const ProcessMatrix &w, const StrategyPair &s) {
    return analytic_probabilities(ProcessCoefficients::from(w), s);
}

}  // namespace pmx
