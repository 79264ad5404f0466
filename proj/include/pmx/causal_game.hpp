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

// "Guess your partner's input": Alice gets bit a, Bob gets bits b and b'.
// For b' = 0 Alice must output x = b; for b' = 1 Bob must output y = a.
//
//   p_succ = 1/2 [ P(x = b | b' = 0) + P(y = a | b' = 1) ]
//
// with a, b, b' uniform. Local operations are restricted to maps built from
// dichotomic qubit observables O_m = (m|sigma) with |m| = 1.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pmx/channels.hpp"
#include "pmx/process_matrices.hpp"

namespace pmx {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
/// Rank-3 real tensor, index (i, j, k) -> 9 i + 3 j + k.
using Tensor3 = std::array<double, 27>;

class StrategyError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Boolean function of two bits, f(first, second), stored as the truth
/// table [f(0,0), f(1,0), f(0,1), f(1,1)].
class BooleanTable {
   public:
    constexpr BooleanTable() = default;
    constexpr explicit BooleanTable(std::array<std::uint8_t, 4> bits) : bits_(bits) {
        for (auto &b : bits_) b &= 1u;
    }
    /// Bit k of `mask` is entry k of the table.
    static constexpr BooleanTable from_mask(unsigned mask) {
        return BooleanTable({static_cast<std::uint8_t>(mask & 1u), static_cast<std::uint8_t>((mask >> 1) & 1u),
                             static_cast<std::uint8_t>((mask >> 2) & 1u),
                             static_cast<std::uint8_t>((mask >> 3) & 1u)});
    }

    constexpr int operator()(int first, int second) const { return bits_[2 * second + first]; }
    constexpr const std::array<std::uint8_t, 4> &bits() const { return bits_; }
    constexpr unsigned mask() const { return bits_[0] | bits_[1] << 1 | bits_[2] << 2 | bits_[3] << 3; }
    /// True when f(0, s) == f(1, s): the value ignores the first bit at `second`.
    constexpr bool constant_in_first(int second) const { return (*this)(0, second) == (*this)(1, second); }

    constexpr bool operator==(const BooleanTable &) const = default;

   private:
    std::array<std::uint8_t, 4> bits_{};
};

enum class MapMode {
    /// Measure O_m, reprepare from an eigenspace of O_n; the correlation
    /// tensor is m n^T.
    MeasureReprepare,
    /// Correlation tensor supplied explicitly; the map must still be CP.
    Correlated,
};

std::string_view to_string(MapMode mode);
MapMode parse_map_mode(std::string_view text);

/// Alice's instrument for input a:
///   xi(x,a) = 1/4 [I + (-1)^x (m|s^A1) + (-1)^F (n|s^A2) + (-1)^(F xor x) (T|s^A1 s^A2)]
/// with F = F(x, a).
struct AliceStrategy {
    MapMode mode = MapMode::MeasureReprepare;
    std::array<Vec3, 2> m{Vec3::UnitZ(), Vec3::UnitZ()};
    std::array<Vec3, 2> n{Vec3::UnitZ(), Vec3::UnitZ()};
    std::array<Mat3, 2> T{Mat3::Zero(), Mat3::Zero()};  // read in Correlated mode only
    BooleanTable F;

    Mat3 correlation(int a) const;
};

/// Bob guesses (b' = 1): eta(y,b,1) = 1/2 [I + (-1)^y (r|s)]^B1 (x) rho^B2.
/// Bob sends (b' = 0):
///   eta(y,b,0) = 1/4 [I + (-1)^y (t|s^B1) + (-1)^G (o|s^B2) + (-1)^(G xor y) (S|s^B1 s^B2)]
/// with G = G(y, b).
struct BobStrategy {
    Vec3 r = Vec3::UnitZ();
    ComplexMatrix rho_b2 = ComplexMatrix::Identity(2, 2) * 0.5;
    MapMode mode = MapMode::MeasureReprepare;
    Vec3 t = Vec3::UnitZ();
    Vec3 o = Vec3::UnitZ();
    Mat3 S = Mat3::Zero();  // read in Correlated mode only
    BooleanTable G;

    Mat3 correlation() const;
};

struct StrategyPair {
    AliceStrategy alice;
    BobStrategy bob;
};

/// Alice: measure Z, encode a in Z. Bob: guess with Z; send with
/// t = X, o = Z, G(y, b) = y xor b. Reaches (2 + sqrt2)/4 on make_ocb().
StrategyPair ocb_optimal_strategies();

/// Throws StrategyError if vectors are not unit, tensors not unit
/// Frobenius norm, rho_b2 not a qubit state, or any map fails CP.
void validate_strategy(const StrategyPair &s);

CjOperator alice_cj(const AliceStrategy &s, int x, int a);
CjOperator bob_cj(const BobStrategy &s, int y, int b, int bprime);

/// Tr[W (M^{A1A2} (x) M^{B1B2})].
double joint_probability(const ProcessMatrix &w, const CjOperator &alice, const CjOperator &bob);

/// P(x, y | a, b, b') for all 32 index combinations.
class JointDistribution {
   public:
    double &at(int x, int y, int a, int b, int bprime) { return p_[index(x, y, a, b, bprime)]; }
    double at(int x, int y, int a, int b, int bprime) const { return p_[index(x, y, a, b, bprime)]; }

   private:
    static constexpr size_t index(int x, int y, int a, int b, int bprime) {
        return static_cast<size_t>(x | y << 1 | a << 2 | b << 3 | bprime << 4);
    }
    std::array<double, 32> p_{};
};

JointDistribution joint_distribution(const ProcessMatrix &w, const StrategyPair &s);

/// P(x = b | b' = 0) and P(y = a | b' = 1), averaged over uniform a, b.
struct GuessProbabilities {
    double alice_guesses_b = 0;
    double bob_guesses_a = 0;

    double success() const { return 0.5 * (alice_guesses_b + bob_guesses_a); }
};

GuessProbabilities guess_probabilities(const JointDistribution &p);
double success_probability(const ProcessMatrix &w, const StrategyPair &s);

/// Real expansion coefficients of a qubit process in the normalisation
///   W = 1/4 [I + sum c_ij s^A1_i s^B2_j + sum d_ijk s^A1_i s^B1_j s^B2_k
///              + sum e_ij s^A2_i s^B1_j + sum f_ijk s^A1_i s^A2_j s^B1_k
///              + sum v_i s^A1_i + sum x_i s^B1_i + sum g_ij s^A1_i s^B1_j],
/// Pauli indices 0..2 = X, Y, Z.
struct ProcessCoefficients {
    Vec3 v = Vec3::Zero();
    Vec3 x = Vec3::Zero();
    Mat3 c = Mat3::Zero();
    Mat3 e = Mat3::Zero();
    Mat3 g = Mat3::Zero();
    Tensor3 d{};
    Tensor3 f{};

    static ProcessCoefficients from(const ProcessMatrix &w);
};

/// sum_ijk t_ijk a_ij b_k (a is the leading pair).
double contract_pair_first(const Tensor3 &t, const Mat3 &a, const Vec3 &b);
/// sum_ijk t_ijk a_i b_jk.
double contract_pair_last(const Tensor3 &t, const Vec3 &a, const Mat3 &b);

/// Closed-form guess probabilities read off the process coefficients. Per
/// hidden bit, the branch (local-vector term vs correlation term) follows
/// from whether F (resp. G) depends on the measured outcome.
GuessProbabilities analytic_probabilities(const ProcessCoefficients &w, const StrategyPair &s);
GuessProbabilities analytic_probabilities(const ProcessMatrix &w, const StrategyPair &s);

}  // namespace pmx
