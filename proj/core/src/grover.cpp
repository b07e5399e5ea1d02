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

#include "hepgrover/grover.hpp"

#include "hepgrover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hepgrover {
namespace {

void check_marked(std::size_t n, const std::set<BasisState> &marked) {
    const BasisState dim = BasisState{1} << n;
    for (BasisState m : marked) {
        if (m >= dim) {
            throw ValidationError("marked state " + std::to_string(m) +
                                  " outside [0, " + std::to_string(dim) + ")");
        }
    }
}

void check_width(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw CapacityError("search register of " + std::to_string(n) +
                            " qubits outside supported range [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
}

// Phase flip of the all-ones state over every qubit of the circuit.
void flip_all_ones(Circuit &c) {
    const std::size_t n = c.num_qubits();
    if (n == 1) {
        c.z(0);
        return;
    }
    if (n == 2) {
        c.cz(0, 1);
        return;
    }
    std::vector<Qubit> controls(n - 1);
    std::iota(controls.begin(), controls.end(), Qubit{0});
    c.mcz(std::move(controls), n - 1);
}

} // namespace

void GroverProblem::validate() const {
    check_width(num_qubits);
    check_marked(num_qubits, marked);
}

StateVector uniform_superposition(std::size_t num_qubits) {
    check_width(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double a = std::pow(2.0, -0.5 * static_cast<double>(num_qubits));
    return StateVector::from_amplitudes(
        std::vector<Amplitude>(dim, Amplitude{a, 0.0}));
}

Circuit oracle_circuit(std::size_t num_qubits,
                       const std::set<BasisState> &marked) {
    check_width(num_qubits);
    check_marked(num_qubits, marked);
    Circuit c(num_qubits, "oracle");
    for (BasisState m : marked) {
        for (Qubit q = 0; q < num_qubits; ++q) {
            if (((m >> q) & 1U) == 0) {
                c.x(q);
            }
        }
        flip_all_ones(c);
        for (Qubit q = 0; q < num_qubits; ++q) {
            if (((m >> q) & 1U) == 0) {
                c.x(q);
            }
        }
    }
    return c;
}

Circuit diffusion_circuit(std::size_t num_qubits) {
    check_width(num_qubits);
    Circuit c(num_qubits, "diffusion");
    for (Qubit q = 0; q < num_qubits; ++q) {
        c.h(q);
    }
    for (Qubit q = 0; q < num_qubits; ++q) {
        c.x(q);
    }
    flip_all_ones(c);
    for (Qubit q = 0; q < num_qubits; ++q) {
        c.x(q);
    }
    for (Qubit q = 0; q < num_qubits; ++q) {
        c.h(q);
    }
    return c;
}

double success_probability_analytic(std::size_t num_qubits,
                                    std::size_t num_marked,
                                    std::size_t iterations) {
    const double dim = std::ldexp(1.0, static_cast<int>(num_qubits));
    if (num_marked == 0 || static_cast<double>(num_marked) > dim) {
        throw ValidationError("marked count " + std::to_string(num_marked) +
                              " outside [1, 2^" + std::to_string(num_qubits) +
                              "]");
    }
    const double theta =
        std::asin(std::sqrt(static_cast<double>(num_marked) / dim));
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) *
                              theta);
    return s * s;
}

std::size_t optimal_iterations(std::size_t num_qubits, std::size_t num_marked) {
    if (num_marked == 0) {
        throw UndefinedSearchError(
            "optimal iteration count is undefined with no marked states");
    }
    const double dim = std::ldexp(1.0, static_cast<int>(num_qubits));
    if (static_cast<double>(num_marked) > dim) {
        throw ValidationError("more marked states than basis states");
    }
    const double x = std::numbers::pi / 4.0 *
                     std::sqrt(dim / static_cast<double>(num_marked));
    const auto lo = static_cast<std::size_t>(std::floor(x));
    const auto hi = static_cast<std::size_t>(std::ceil(x));
    const double p_lo = success_probability_analytic(num_qubits, num_marked, lo);
    const double p_hi = success_probability_analytic(num_qubits, num_marked, hi);
    // Equal within rounding counts as a tie.
    return p_hi > p_lo + 1e-12 ? hi : lo;
}

Circuit build_grover(const GroverProblem &problem) {
    problem.validate();
    const std::size_t n = problem.num_qubits;
    Circuit c(n, "grover");
    for (Qubit q = 0; q < n; ++q) {
        c.h(q);
    }
    if (problem.iterations == 0) {
        return c;
    }
    Circuit round = oracle_circuit(n, problem.marked);
    round.append(diffusion_circuit(n));
    for (std::size_t k = 0; k < problem.iterations; ++k) {
        c.append(round);
    }
    return c;
}

GroverOutcome run_grover(const GroverProblem &problem, std::uint64_t shots,
                         std::uint64_t seed) {
    const Circuit circuit = build_grover(problem);
    StateVector state = apply_circuit(new_zero_state(problem.num_qubits), circuit);
    Histogram counts = sample(state, shots, seed);
    double success = 0.0;
    for (BasisState m : problem.marked) {
        success += std::norm(state[m]);
    }
    return {std::move(state), std::move(counts), std::min(success, 1.0)};
}

double classical_expected_probes(std::uint64_t database_size) {
    if (database_size == 0) {
        throw ValidationError("database size must be >= 1");
    }
    return (static_cast<double>(database_size) + 1.0) / 2.0;
}

} // namespace hepgrover
