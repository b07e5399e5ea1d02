// Copyright 2026 The hepgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dense_oracle.hpp"

#include "hepgrover/errors.hpp"
#include "hepgrover/state_vector.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hepgrover {
namespace {

using testing::circuit_matrix;
using testing::gate_matrix;
using testing::Matrix;
using testing::to_vector;
using testing::Vector;

constexpr double kTol = 1e-12;

Gate random_gate(std::mt19937_64 &rng, std::size_t n) {
    std::vector<Qubit> perm(n);
    std::iota(perm.begin(), perm.end(), Qubit{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<GateKind> kinds{GateKind::X, GateKind::H, GateKind::Z,
                                GateKind::S};
    if (n >= 2) {
        kinds.insert(kinds.end(), {GateKind::CX, GateKind::CZ, GateKind::MCZ});
    }
    if (n >= 3) {
        kinds.push_back(GateKind::CCX);
    }
    const auto kind = kinds[rng() % kinds.size()];
    switch (kind) {
    case GateKind::CX:
        return Gate::cx(perm[0], perm[1]);
    case GateKind::CZ:
        return Gate::cz(perm[0], perm[1]);
    case GateKind::CCX:
        return Gate::ccx(perm[0], perm[1], perm[2]);
    case GateKind::MCZ: {
        const std::size_t k = 1 + rng() % (n - 1);
        return Gate::mcz({perm.begin() + 1, perm.begin() + 1 + long(k)}, perm[0]);
    }
    default:
        return Gate{kind, {perm[0]}, {}};
    }
}

Vector random_state(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v(Eigen::Index(i)) = amps[i] / std::sqrt(norm);
    }
    return v;
}

StateVector from_vector(const Vector &v) {
    return StateVector::from_amplitudes({v.data(), v.data() + v.size()});
}

TEST(StateVector, StartsInAllZeroState) {
    const StateVector s(4);
    EXPECT_EQ(s.size(), 16u);
    EXPECT_EQ(s[0], Amplitude(1.0, 0.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, CapacityBounds) {
    EXPECT_THROW(StateVector(0), CapacityError);
    EXPECT_THROW(StateVector(kMaxQubits + 1), CapacityError);
    EXPECT_NO_THROW(StateVector(12));
}

TEST(StateVector, FromAmplitudesNeedsPowerOfTwo) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ValidationError);
    const auto s = StateVector::from_amplitudes({0.0, 1.0});
    EXPECT_EQ(s.num_qubits(), 1u);
}

TEST(StateVector, QubitZeroIsLeastSignificant) {
    auto s = apply_gate(StateVector(3), Gate::x(0));
    EXPECT_EQ(s[1], Amplitude(1.0));
    s = apply_gate(StateVector(3), Gate::x(2));
    EXPECT_EQ(s[4], Amplitude(1.0));
}

TEST(StateVector, BellPair) {
    Circuit c(2);
    c.h(0).cx(0, 1);
    const auto s = apply_circuit(StateVector(2), c);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s[0] - r), 0.0, kTol);
    EXPECT_NEAR(std::abs(s[3] - r), 0.0, kTol);
    EXPECT_NEAR(std::abs(s[1]), 0.0, kTol);
    EXPECT_NEAR(std::abs(s[2]), 0.0, kTol);
}

TEST(StateVector, CircuitWidthMustMatch) {
    StateVector s(2);
    EXPECT_THROW(s.apply(Circuit(3)), ValidationError);
    EXPECT_THROW(s.apply(Gate::x(2)), ValidationError);
}

TEST(StateVector, EachGateMatchesDenseOperator) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            const Gate g = random_gate(rng, n);
            const Vector v = random_state(rng, n);
            auto s = from_vector(v);
            s.apply(g);
            const Vector expected = gate_matrix(g, n) * v;
            EXPECT_LT((to_vector(s) - expected).cwiseAbs().maxCoeff(), kTol)
                << gate_name(g.kind) << " n=" << n;
        }
    }
}

TEST(StateVector, RandomCircuitsMatchDenseProduct) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        Circuit c(n);
        for (int i = 0; i < 30; ++i) {
            c.add(random_gate(rng, n));
        }
        const Vector v = random_state(rng, n);
        const auto s = apply_circuit(from_vector(v), c);
        const Matrix u = circuit_matrix(c);
        EXPECT_LT((to_vector(s) - u * v).cwiseAbs().maxCoeff(), 1e-10);
        const auto dim = Eigen::Index(1) << n;
        EXPECT_LT((u.adjoint() * u - Matrix::Identity(dim, dim))
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-10);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
}

TEST(StateVector, SelfInverseGates) {
    std::mt19937_64 rng(13);
    const Vector v = random_state(rng, 4);
    for (const Gate &g : {Gate::x(1), Gate::h(2), Gate::z(0), Gate::cx(3, 0),
                          Gate::cz(1, 2), Gate::ccx(0, 1, 3),
                          Gate::mcz({0, 1, 2}, 3)}) {
        auto s = from_vector(v);
        s.apply(g);
        s.apply(g);
        EXPECT_LT((to_vector(s) - v).cwiseAbs().maxCoeff(), kTol)
            << gate_name(g.kind);
    }
}

TEST(StateVector, SSquaredIsZ) {
    std::mt19937_64 rng(14);
    const Vector v = random_state(rng, 3);
    auto a = from_vector(v);
    a.apply(Gate::s(1));
    a.apply(Gate::s(1));
    auto b = from_vector(v);
    b.apply(Gate::z(1));
    EXPECT_LT((to_vector(a) - to_vector(b)).cwiseAbs().maxCoeff(), kTol);
}

TEST(StateVector, PauliYEqualsIXZ) {
    std::mt19937_64 rng(15);
    const Vector v = random_state(rng, 3);
    auto a = from_vector(v);
    a.apply_pauli(2, Pauli::Y);
    auto b = from_vector(v);
    b.apply(Gate::z(2));
    b.apply(Gate::x(2));
    const Vector expected = Amplitude(0.0, 1.0) * to_vector(b);
    EXPECT_LT((to_vector(a) - expected).cwiseAbs().maxCoeff(), kTol);

    auto c = from_vector(v);
    c.apply_pauli(0, Pauli::I);
    EXPECT_LT((to_vector(c) - v).cwiseAbs().maxCoeff(), 0.0 + kTol);
    EXPECT_THROW(c.apply_pauli(3, Pauli::X), ValidationError);
}

TEST(StateVector, ProbabilitiesSumToOne) {
    Circuit c(6);
    for (Qubit q = 0; q < 6; ++q) {
        c.h(q);
    }
    c.ccx(0, 1, 5).s(2).cz(3, 4);
    const auto p = probabilities(apply_circuit(StateVector(6), c));
    double total = 0.0;
    for (double x : p) {
        total += x;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(StateVector, NormHoldsOverLongCircuits) {
    std::mt19937_64 rng(16);
    auto s = from_vector(random_state(rng, 5));
    for (int i = 0; i < 10000; ++i) {
        const Gate g = random_gate(rng, 5);
        s.apply(g);
        if (i % 1000 == 0) {
            ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
        }
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
}

TEST(StateVector, ThreeSGatesUndoOne) {
    std::mt19937_64 rng(17);
    const Vector v = random_state(rng, 2);
    auto s = from_vector(v);
    for (int i = 0; i < 4; ++i) {
        s.apply(Gate::s(0));
    }
    EXPECT_LT((to_vector(s) - v).cwiseAbs().maxCoeff(), 1e-12);
}

} // namespace
} // namespace hepgrover
