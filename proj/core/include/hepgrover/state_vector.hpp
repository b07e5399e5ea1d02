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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hepgrover {

using Amplitude = std::complex<double>;

/// Largest register new_zero_state() will allocate (2^24 amplitudes, 256 MiB).
inline constexpr std::size_t kMaxQubits = 24;

enum class Pauli { I, X, Y, Z };

/**
 * Dense pure state of an n-qubit register.
 *
 * Amplitude i belongs to the basis state whose bit k is the value of qubit k,
 * so qubit 0 is the least-significant bit. Gates are applied in place by
 * walking amplitude pairs (or single amplitudes for diagonal gates) selected
 * with bit masks; no operator matrix is ever formed.
 */
class StateVector {
  public:
    /// |0...0> on num_qubits qubits. Throws CapacityError outside [1, 24].
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of explicit amplitudes. The size must be a power of two
    /// with 1 <= log2(size) <= 24; normalisation is the caller's business.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Amplitude &operator[](BasisState i) const {
        return amps_[i];
    }

    /// Sum of |a_i|^2.
    [[nodiscard]] double norm_squared() const noexcept;

    /// Throws ValidationError if the gate does not fit this register.
    void apply(const Gate &gate);
    /// Throws ValidationError on a width mismatch.
    void apply(const Circuit &circuit);

    void apply_pauli(Qubit q, Pauli p);

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    StateVector() = default;

    void apply_single(Qubit target, BasisState control_mask,
                      const Amplitude (&m)[2][2]);
    void apply_x(Qubit target, BasisState control_mask);
    void apply_phase(BasisState mask, Amplitude phase);

    std::size_t num_qubits_{0};
    std::vector<Amplitude> amps_;
};

[[nodiscard]] StateVector new_zero_state(std::size_t num_qubits);
[[nodiscard]] StateVector apply_gate(StateVector state, const Gate &gate);
[[nodiscard]] StateVector apply_circuit(StateVector state,
                                        const Circuit &circuit);

/// p_i = |a_i|^2 for every basis state.
[[nodiscard]] std::vector<double> probabilities(const StateVector &state);

} // namespace hepgrover
