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

// Reference computations for tests. Each one is written from first
// principles with plain loops and avoids the library code it checks.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "pmx/causal_game.hpp"

namespace pmx::oracle {

using Mat = Eigen::MatrixXcd;

inline Mat naive_kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline Mat sigma(int i) {
    Mat m(2, 2);
    const std::complex<double> I(0, 1);
    switch (i) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -I, I, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

/// Tensor product of single-qubit Paulis from a word over {0,1,2,3}.
inline Mat pauli_word(std::initializer_list<int> word) {
    Mat out = Mat::Identity(1, 1);
    for (int i : word) out = naive_kron(out, sigma(i));
    return out;
}

/// Partial trace over subsystem `k` of a multipartite operator with
/// subsystem dimensions `dims`, written as an explicit index sum.
inline Mat naive_partial_trace(const Mat &m, const std::vector<int> &dims, size_t k) {
    const size_t n = dims.size();
    int total = 1;
    for (int d : dims) total *= d;
    const int dk = dims[k];
    const int reduced = total / dk;
    Mat out = Mat::Zero(reduced, reduced);
    auto digits = [&](int flat) {
        std::vector<int> out_digits(n);
        for (size_t i = n; i-- > 0;) {
            out_digits[i] = flat % dims[i];
            flat /= dims[i];
        }
        return out_digits;
    };
    auto reduce = [&](const std::vector<int> &d) {
        int flat = 0;
        for (size_t i = 0; i < n; ++i) {
            if (i != k) flat = flat * dims[i] + d[i];
        }
        return flat;
    };
    for (int r = 0; r < total; ++r) {
        for (int c = 0; c < total; ++c) {
            const auto dr = digits(r);
            const auto dc = digits(c);
            if (dr[k] != dc[k]) continue;
            out(reduce(dr), reduce(dc)) += m(r, c);
        }
    }
    return out;
}

inline Mat random_gaussian(std::mt19937_64 &rng, int rows, int cols) {
    std::normal_distribution<double> g(0, 1);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = {g(rng), g(rng)};
    return m;
}

inline Mat random_hermitian(std::mt19937_64 &rng, int d) {
    Mat g = random_gaussian(rng, d, d);
    return (g + g.adjoint()) / 2.0;
}

inline Mat random_density(std::mt19937_64 &rng, int d) {
    Mat g = random_gaussian(rng, d, d);
    Mat rho = g * g.adjoint();
    return rho / rho.trace().real();
}

/// Kraus operators of a random channel d_in -> d_out with `rank` terms:
/// blocks of a random isometry from Gram-Schmidt.
inline std::vector<Mat> random_kraus(std::mt19937_64 &rng, int d_in, int d_out, int rank) {
    Mat g = random_gaussian(rng, rank * d_out, d_in);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ() * Mat::Identity(rank * d_out, d_in);
    std::vector<Mat> kraus;
    for (int r = 0; r < rank; ++r) kraus.push_back(q.block(r * d_out, 0, d_out, d_in));
    return kraus;
}

inline Mat apply_kraus(const std::vector<Mat> &kraus, const Mat &rho) {
    Mat out = Mat::Zero(kraus[0].rows(), kraus[0].rows());
    for (const auto &k : kraus) out += k * rho * k.adjoint();
    return out;
}

/// [sum_jk |j><k| (x) E(|j><k|)]^T built by feeding basis operators
/// through the Kraus action.
inline Mat choi_by_action(const std::vector<Mat> &kraus, int d_in) {
    const int d_out = static_cast<int>(kraus[0].rows());
    Mat out = Mat::Zero(d_in * d_out, d_in * d_out);
    for (int j = 0; j < d_in; ++j) {
        for (int k = 0; k < d_in; ++k) {
            Mat e = Mat::Zero(d_in, d_in);
            e(j, k) = 1;
            out += naive_kron(e, apply_kraus(kraus, e));
        }
    }
    return out.transpose();
}

/// Dichotomic observable (v|sigma).
inline Mat obs(const Vec3 &v) { return v[0] * sigma(1) + v[1] * sigma(2) + v[2] * sigma(3); }

/// sum_ij t_ij sigma_i (x) sigma_j.
inline Mat corr(const Mat3 &t) {
    Mat out = Mat::Zero(4, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out += t(i, j) * naive_kron(sigma(i + 1), sigma(j + 1));
    return out;
}

inline Mat xi(const AliceStrategy &s, int x, int a) {
    const int F = s.F(x, a);
    const double sx = x ? -1 : 1, sf = F ? -1 : 1;
    const Mat3 t = s.mode == MapMode::Correlated ? s.T[a] : Mat3(s.m[a] * s.n[a].transpose());
    return 0.25 * (Mat::Identity(4, 4) + sx * naive_kron(obs(s.m[a]), sigma(0)) +
                   sf * naive_kron(sigma(0), obs(s.n[a])) + sx * sf * corr(t));
}

inline Mat eta(const BobStrategy &s, int y, int b, int bprime) {
    const double sy = y ? -1 : 1;
    if (bprime == 1) return naive_kron(0.5 * (sigma(0) + sy * obs(s.r)), s.rho_b2);
    const int G = s.G(y, b);
    const double sg = G ? -1 : 1;
    const Mat3 t = s.mode == MapMode::Correlated ? s.S : Mat3(s.t * s.o.transpose());
    return 0.25 * (Mat::Identity(4, 4) + sy * naive_kron(obs(s.t), sigma(0)) +
                   sg * naive_kron(sigma(0), obs(s.o)) + sy * sg * corr(t));
}

/// Success probability by direct traces Tr[W (xi (x) eta)].
inline double success_by_trace(const Mat &w, const StrategyPair &s) {
    double total = 0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            // b' = 0: Alice must output x = b.
            for (int y = 0; y < 2; ++y) total += (w * naive_kron(xi(s.alice, b, a), eta(s.bob, y, b, 0))).trace().real();
            // b' = 1: Bob must output y = a.
            for (int x = 0; x < 2; ++x) total += (w * naive_kron(xi(s.alice, x, a), eta(s.bob, a, b, 1))).trace().real();
        }
    }
    return total / 8.0;
}

/// Euclidean projection of a point onto {|u| + |v| <= 1}.
inline std::array<double, 2> project_l1_ball(double u, double v) {
    if (std::abs(u) + std::abs(v) <= 1) return {u, v};
    // Soft-threshold by the level theta that lands on the boundary.
    std::array<double, 2> a{std::abs(u), std::abs(v)};
    std::sort(a.begin(), a.end(), std::greater<>());
    double theta = a[0] - 1;
    if (a[1] > theta) theta = (a[0] + a[1] - 1) / 2;
    auto shrink = [&](double z) { return std::copysign(std::max(std::abs(z) - theta, 0.0), z); };
    return {shrink(u), shrink(v)};
}

inline double l1_ball_distance(double u, double v) {
    const auto p = project_l1_ball(u, v);
    return (u - p[0]) * (u - p[0]) + (v - p[1]) * (v - p[1]);
}

}  // namespace pmx::oracle
