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

#pragma once

#include "hepgrover/circuit.hpp"
#include "hepgrover/sampling.hpp"
#include "hepgrover/state_vector.hpp"

#include <cstddef>
#include <cstdint>
#include <set>

namespace hepgrover {

/// Search over the 2^n basis states of an n-qubit register.
struct GroverProblem {
    std::size_t num_qubits{1};
    /// May be empty: the run then stays in uniform superposition.
    std::set<BasisState> marked;
    std::size_t iterations{0};

    /// Throws CapacityError / ValidationError.
    void validate() const;
};

struct GroverOutcome {
    StateVector final_state;
    Histogram counts;
    /// Exact probability mass on the marked states.
    double success_probability{0.0};
};

/// Every amplitude equal to 2^(-n/2).
[[nodiscard]] StateVector uniform_superposition(std::size_t num_qubits);

/// Phase oracle: flips the sign of each marked basis state. Each marked state
/// costs one MCZ over the whole register conjugated by X on its zero bits
/// (Z when n == 1, CZ when n == 2).
[[nodiscard]] Circuit oracle_circuit(std::size_t num_qubits,
                                     const std::set<BasisState> &marked);

/// H^n X^n MCZ X^n H^n. Equals -(2|s><s| - I): inversion about the mean up to
/// a global phase of -1.
[[nodiscard]] Circuit diffusion_circuit(std::size_t num_qubits);

/// sin^2((2k+1) theta) with theta = asin(sqrt(m / 2^n)).
[[nodiscard]] double success_probability_analytic(std::size_t num_qubits,
                                                  std::size_t num_marked,
                                                  std::size_t iterations);

/**
 * Best of floor(x) and ceil(x) for x = pi/4 * sqrt(2^n / m), judged by the
 * analytic success probability; ties go to the smaller count.
 *
 * Plain nearest-integer rounding of x picks k = 2 for n = 2, m = 1, which
 * drops the success probability from 1 to 0.25.
 *
 * Throws UndefinedSearchError for m == 0 and ValidationError for m > 2^n.
 */
[[nodiscard]] std::size_t optimal_iterations(std::size_t num_qubits,
                                             std::size_t num_marked);

/// H^n followed by problem.iterations rounds of (oracle, diffusion).
[[nodiscard]] Circuit build_grover(const GroverProblem &problem);

[[nodiscard]] GroverOutcome run_grover(const GroverProblem &problem,
                                       std::uint64_t shots, std::uint64_t seed);

/// Mean number of probes a linear scan needs to hit one target drawn
/// uniformly from N entries: (N + 1) / 2.
[[nodiscard]] double classical_expected_probes(std::uint64_t database_size);

} // namespace hepgrover
