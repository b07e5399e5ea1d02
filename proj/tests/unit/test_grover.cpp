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
#include "hepgrover/grover.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace hepgrover {
namespace {

using testing::Matrix;

// Two-amplitude recursion: every marked state shares amplitude a, every
// unmarked one shares b.
double success_by_recursion(std::size_t n, std::size_t m, std::size_t k) {
    const double dim = std::ldexp(1.0, static_cast<int>(n));
    double a = 1.0 / std::sqrt(dim);
    double b = a;
    for (std::size_t i = 0; i < k; ++i) {
        a = -a;
        const double mean = (double(m) * a + (dim - double(m)) * b) / dim;
        a = 2.0 * mean - a;
        b = 2.0 * mean - b;
    }
    return double(m) * a * a;
}

std::set<BasisState> random_marked(std::mt19937_64 &rng, std::size_t n) {
    const BasisState dim = BasisState{1} << n;
    const std::size_t m = 1 + rng() % dim;
    std::set<BasisState> marked;
    while (marked.size() < m) {
        marked.insert(rng() % dim);
    }
    return marked;
}

TEST(Grover, UniformSuperposition) {
    const auto s = uniform_superposition(3);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(s[i] - 1.0 / std::sqrt(8.0)), 0.0, 1e-15);
    }
}

TEST(Grover, AnalyticMatchesRecursion) {
    for (std::size_t n = 1; n <= 10; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t m : {std::size_t{1}, std::size_t{2}, dim / 3 + 1, dim}) {
            if (m == 0 || m > dim) {
                continue;
            }
            for (std::size_t k = 0; k < 12; ++k) {
                EXPECT_NEAR(success_probability_analytic(n, m, k),
                            success_by_recursion(n, m, k), 1e-9)
                    << "n=" << n << " m=" << m << " k=" << k;
            }
        }
    }
}

TEST(Grover, ReportedCurveValues) {
    EXPECT_NEAR(success_probability_analytic(3, 1, 1), 0.78, 0.005);
    EXPECT_NEAR(success_probability_analytic(3, 1, 2), 0.94, 0.006);
    EXPECT_NEAR(success_probability_analytic(3, 1, 3), 0.33, 0.005);
    EXPECT_NEAR(success_probability_analytic(4, 1, 1), 0.47, 0.005);
    EXPECT_DOUBLE_EQ(success_probability_analytic(3, 1, 1), 0.78125);
    EXPECT_DOUBLE_EQ(success_probability_analytic(4, 1, 1), 0.47265625);
}

TEST(Grover, AnalyticRejectsBadCounts) {
    EXPECT_THROW((void)success_probability_analytic(3, 0, 1), ValidationError);
    EXPECT_THROW((void)success_probability_analytic(3, 9, 1), ValidationError);
}

TEST(Grover, OptimalIterationsPicksBestRounding) {
    for (std::size_t n = 1; n <= 12; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t m = 1; m <= std::min<std::size_t>(dim, 9); ++m) {
            const double x = std::numbers::pi / 4.0 *
                             std::sqrt(double(dim) / double(m));
            const auto lo = static_cast<std::size_t>(std::floor(x));
            const auto hi = static_cast<std::size_t>(std::ceil(x));
            const double p_lo = success_by_recursion(n, m, lo);
            const double p_hi = success_by_recursion(n, m, hi);
            const std::size_t expected = p_hi > p_lo + 1e-12 ? hi : lo;
            EXPECT_EQ(optimal_iterations(n, m), expected) << n << " " << m;
        }
    }
    EXPECT_EQ(optimal_iterations(3, 1), 2u);
    EXPECT_EQ(optimal_iterations(2, 1), 1u);
    EXPECT_NEAR(success_probability_analytic(2, 1, optimal_iterations(2, 1)),
                1.0, 1e-12);
    EXPECT_THROW((void)optimal_iterations(3, 0), UndefinedSearchError);
}

TEST(Grover, OracleMatchesDensePhaseFlip) {
    std::mt19937_64 rng(21);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto marked = random_marked(rng, n);
            const Matrix u = testing::circuit_matrix(oracle_circuit(n, marked));
            EXPECT_LT((u - testing::phase_oracle(n, marked)).cwiseAbs().maxCoeff(),
                      1e-12);
        }
    }
}

TEST(Grover, DiffusionIsReflectionUpToPhase) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix u = testing::circuit_matrix(diffusion_circuit(n));
        EXPECT_LT(testing::distance_up_to_phase(u, testing::reflection_about_mean(n)),
                  1e-12)
            << n;
    }
}

TEST(Grover, FullRunMatchesDenseIteration) {
    std::mt19937_64 rng(22);
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto marked = random_marked(rng, n);
        const std::size_t k = 1 + rng() % 3;
        const Matrix g = testing::reflection_about_mean(n) *
                         testing::phase_oracle(n, marked);
        testing::Vector v = testing::to_vector(uniform_superposition(n));
        for (std::size_t i = 0; i < k; ++i) {
            v = g * v;
        }
        const auto out = run_grover({n, marked, k}, 1024, 3);
        double expected = 0.0;
        for (BasisState s : marked) {
            expected += std::norm(v(Eigen::Index(s)));
        }
        EXPECT_NEAR(out.success_probability, expected, 1e-10);
        EXPECT_EQ(total_shots(out.counts), 1024u);
    }
}

TEST(Grover, ProblemValidation) {
    EXPECT_THROW((GroverProblem{3, {8}, 1}).validate(), ValidationError);
    EXPECT_THROW((GroverProblem{0, {}, 0}).validate(), CapacityError);
    EXPECT_NO_THROW((GroverProblem{3, {}, 0}).validate());
}

TEST(Grover, ClassicalProbesMatchLinearScan) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t probes = 0;
        for (std::uint64_t target = 0; target < n; ++target) {
            for (std::uint64_t i = 0; i < n; ++i) {
                ++probes;
                if (i == target) {
                    break;
                }
            }
        }
        EXPECT_DOUBLE_EQ(classical_expected_probes(n),
                         double(probes) / double(n));
    }
    EXPECT_THROW((void)classical_expected_probes(0), ValidationError);
}

TEST(Grover, SimulationMatchesAnalyticForEveryMarkedCount) {
    std::mt19937_64 rng(23);
    for (std::size_t n = 1; n <= 5; ++n) {
        const BasisState dim = BasisState{1} << n;
        for (std::size_t m = 1; m <= dim; ++m) {
            std::set<BasisState> marked;
            while (marked.size() < m) {
                marked.insert(rng() % dim);
            }
            for (std::size_t k = 0; k <= 10; ++k) {
                const auto out = run_grover({n, marked, k}, 1, 0);
                ASSERT_NEAR(out.success_probability,
                            success_by_recursion(n, m, k), 1e-6)
                    << n << " " << m << " " << k;
            }
        }
    }
}

TEST(Grover, FirstIterationHelpsSparseSearch) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t m = 1; 4 * m <= dim; ++m) {
            EXPECT_GT(success_probability_analytic(n, m, 1), double(m) / double(dim));
        }
    }
}

TEST(Grover, NoMarkedStatesLeavesUniform) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto out = run_grover({n, {}, 3}, 16, 1);
        for (double p : probabilities(out.final_state)) {
            EXPECT_NEAR(p, std::ldexp(1.0, -int(n)), 1e-9);
        }
    }
}

} // namespace
} // namespace hepgrover
