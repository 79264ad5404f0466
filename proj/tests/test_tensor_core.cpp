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

#include <gtest/gtest.h>

#include <array>

#include "oracles.hpp"
#include "pmx/tensor_core.hpp"

namespace pmx {
namespace {

using oracle::Mat;

TEST(SpaceLayout, SortsLegsCanonically) {
    SpaceLayout layout({{Leg::B2, 2}, {Leg::A1, 4}, {Leg::B1, 2}});
    ASSERT_EQ(layout.num_legs(), 3u);
    EXPECT_EQ(layout.legs()[0].label, Leg::A1);
    EXPECT_EQ(layout.legs()[2].label, Leg::B2);
    EXPECT_EQ(layout.total_dim(), 16);
    EXPECT_EQ(layout.position(Leg::B1), 1u);
    EXPECT_FALSE(layout.contains(Leg::A2));
    EXPECT_THROW(layout.position(Leg::A2), std::exception);
}

TEST(SpaceLayout, RejectsBadLegs) {
    EXPECT_THROW(SpaceLayout({{Leg::A1, 2}, {Leg::A1, 2}}), std::invalid_argument);
    EXPECT_THROW(SpaceLayout({{Leg::A1, 3}}), std::invalid_argument);
    EXPECT_THROW(SpaceLayout({{Leg::A1, 0}}), std::invalid_argument);
}

TEST(SpaceLayout, ParsesLegNames) {
    for (Leg leg : kAllLegs) EXPECT_EQ(parse_leg(to_string(leg)), leg);
    EXPECT_THROW(parse_leg("C1"), std::invalid_argument);
}

TEST(Kron, MatchesNaiveLoops) {
    std::mt19937_64 rng(1);
    for (auto [r1, c1, r2, c2] : std::vector<std::array<int, 4>>{{2, 2, 2, 2}, {3, 1, 2, 4}, {1, 1, 5, 5}}) {
        const Mat a = oracle::random_gaussian(rng, r1, c1);
        const Mat b = oracle::random_gaussian(rng, r2, c2);
        EXPECT_LT((kron(a, b) - oracle::naive_kron(a, b)).norm(), 1e-13);
    }
}

TEST(Pauli, AlgebraAndLabels) {
    const Complex i(0, 1);
    EXPECT_LT((pauli(1) * pauli(2) - i * pauli(3)).norm(), 1e-15);
    for (int k = 0; k < 4; ++k) {
        EXPECT_LT((pauli(k) * pauli(k) - ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
        EXPECT_EQ(pauli_index(pauli_label(k)), k);
    }
    EXPECT_LT((pauli_string("IZZI") - oracle::pauli_word({0, 3, 3, 0})).norm(), 1e-15);
    EXPECT_THROW(pauli_string("IQ"), std::invalid_argument);
}

TEST(Pauli, FastTraceMatchesDenseTrace) {
    std::mt19937_64 rng(2);
    const Mat m = oracle::random_gaussian(rng, 16, 16);
    for (int flat = 0; flat < 256; ++flat) {
        const std::array<int, 4> idx{flat >> 6 & 3, flat >> 4 & 3, flat >> 2 & 3, flat & 3};
        const Mat p = oracle::pauli_word({idx[0], idx[1], idx[2], idx[3]});
        EXPECT_LT(std::abs(pauli_trace(m, idx) - (m * p).trace()), 1e-12);
    }
}

TEST(HsBasis, OrthogonalAndTraceless) {
    for (int d : {2, 3, 4}) {
        const auto basis = hs_basis(d);
        ASSERT_EQ(basis.size(), static_cast<size_t>(d * d));
        EXPECT_LT((basis[0] - ComplexMatrix::Identity(d, d)).norm(), 1e-15);
        for (size_t a = 0; a < basis.size(); ++a) {
            EXPECT_TRUE(is_hermitian(basis[a]));
            if (a > 0) EXPECT_NEAR(std::abs(basis[a].trace()), 0.0, 1e-13);
            for (size_t b = 0; b < basis.size(); ++b) {
                EXPECT_NEAR(std::abs((basis[a] * basis[b]).trace() - Complex(a == b ? d : 0)), 0.0, 1e-12);
            }
        }
    }
}

TEST(Embed, MatchesKronWithIdentities) {
    std::mt19937_64 rng(3);
    const SpaceLayout layout = SpaceLayout::qubits();
    const Mat op = oracle::random_gaussian(rng, 4, 4);
    const std::array<Leg, 2> mid{Leg::A2, Leg::B1};
    const Mat expect = oracle::naive_kron(oracle::naive_kron(oracle::sigma(0), op), oracle::sigma(0));
    EXPECT_LT((embed(op, mid, layout) - expect).norm(), 1e-13);

    // Non-adjacent, reversed target order: Z on B2 and X on A1.
    const std::array<Leg, 2> legs{Leg::B2, Leg::A1};
    const Mat zx = oracle::naive_kron(oracle::sigma(3), oracle::sigma(1));
    EXPECT_LT((embed(zx, legs, layout) - oracle::pauli_word({1, 0, 0, 3})).norm(), 1e-13);
}

TEST(PartialTrace, MatchesIndexSum) {
    std::mt19937_64 rng(4);
    const SpaceLayout layout({{Leg::A1, 2}, {Leg::A2, 4}, {Leg::B1, 2}});
    const Mat m = oracle::random_gaussian(rng, 16, 16);
    for (size_t k = 0; k < 3; ++k) {
        const std::array<Leg, 1> traced{layout.legs()[k].label};
        const Mat expect = oracle::naive_partial_trace(m, {2, 4, 2}, k);
        EXPECT_LT((partial_trace(m, layout, traced) - expect).norm(), 1e-12);
        EXPECT_EQ(reduced_layout(layout, traced).total_dim(), expect.rows());
    }
    const std::array<Leg, 3> all{Leg::A1, Leg::A2, Leg::B1};
    EXPECT_LT(std::abs(partial_trace(m, layout, all)(0, 0) - m.trace()), 1e-12);
}

TEST(HsDecompose, RoundTripsRandomOperators) {
    std::mt19937_64 rng(5);
    for (const SpaceLayout &layout : {SpaceLayout::qubits(), SpaceLayout({{Leg::A1, 4}, {Leg::B1, 2}})}) {
        const int d = layout.total_dim();
        const Mat m = oracle::random_gaussian(rng, d, d);
        const auto terms = hs_decompose(m, layout, 0.0);
        EXPECT_EQ(terms.size(), static_cast<size_t>(d * d));
        EXPECT_LT((hs_compose(terms, layout) - m).norm(), 1e-11);
    }
}

TEST(HsDecompose, ReadsPauliCoefficients) {
    const Mat m = 0.25 * oracle::pauli_word({0, 0, 0, 0}) + 0.125 * oracle::pauli_word({0, 3, 3, 0}) -
                  0.5 * oracle::pauli_word({1, 0, 2, 3});
    const auto terms = hs_decompose(m, SpaceLayout::qubits());
    ASSERT_EQ(terms.size(), 3u);
    for (const auto &t : terms) {
        if (t.index == std::vector<int>{0, 3, 3, 0}) EXPECT_NEAR(t.coeff.real(), 0.125, 1e-15);
        if (t.index == std::vector<int>{1, 0, 2, 3}) EXPECT_NEAR(t.coeff.real(), -0.5, 1e-15);
    }
}

TEST(Spectral, MatchesGeneralEigensolver) {
    std::mt19937_64 rng(6);
    for (int d : {2, 5, 16}) {
        const Mat h = oracle::random_hermitian(rng, d);
        const EigenSystem es = hermitian_eigensystem(h);
        Eigen::ComplexEigenSolver<Mat> general(h);
        std::vector<double> ref;
        for (int k = 0; k < d; ++k) ref.push_back(general.eigenvalues()[k].real());
        std::sort(ref.begin(), ref.end());
        for (int k = 0; k < d; ++k) EXPECT_NEAR(es.values[k], ref[k], 1e-10);
        EXPECT_LT((es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint() - h).norm(), 1e-10);
    }
}

TEST(Spectral, RejectsNonHermitian) {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1;
    EXPECT_FALSE(is_hermitian(m));
    EXPECT_THROW(hermitian_eigensystem(m), std::invalid_argument);
}

TEST(Spectral, PsdSqrtSquaresBack) {
    std::mt19937_64 rng(7);
    const Mat rho = oracle::random_density(rng, 8);
    const Mat s = psd_sqrt(rho);
    EXPECT_LT((s * s - rho).norm(), 1e-12);
    EXPECT_TRUE(is_psd(s, 1e-12));
    EXPECT_THROW(psd_sqrt(-rho), std::domain_error);
}

TEST(Spectral, HsInnerIsConjugateLinearInFirst) {
    std::mt19937_64 rng(8);
    const Mat a = oracle::random_gaussian(rng, 3, 3);
    const Mat b = oracle::random_gaussian(rng, 3, 3);
    EXPECT_LT(std::abs(hs_inner(a, b) - (a.adjoint() * b).trace()), 1e-12);
    EXPECT_LT(std::abs(hs_inner(Complex(0, 1) * a, b) - Complex(0, -1) * hs_inner(a, b)), 1e-12);
}

}  // namespace
}  // namespace pmx
