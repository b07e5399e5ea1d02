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

#include "hepgrover/state_vector.hpp"

#include "hepgrover/errors.hpp"

#include <bit>
#include <cmath>

namespace hepgrover {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_capacity(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw CapacityError("register of " + std::to_string(n) +
                            " qubits outside supported range [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
}

BasisState mask_of(const std::vector<Qubit> &qubits) {
    BasisState mask = 0;
    for (Qubit q : qubits) {
        mask |= BasisState{1} << q;
    }
    return mask;
}

// Index with a zero inserted at bit position 'bit'.
inline BasisState insert_zero(BasisState k, Qubit bit) {
    const BasisState low = (BasisState{1} << bit) - 1;
    return ((k & ~low) << 1) | (k & low);
}

} // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_capacity(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = Amplitude{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t size = amplitudes.size();
    if (size < 2 || !std::has_single_bit(size)) {
        throw ValidationError("amplitude count " + std::to_string(size) +
                              " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(size));
    check_capacity(n);
    StateVector state;
    state.num_qubits_ = n;
    state.amps_ = std::move(amplitudes);
    return state;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const Amplitude &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::apply_single(Qubit target, BasisState control_mask,
                               const Amplitude (&m)[2][2]) {
    const BasisState stride = BasisState{1} << target;
    const BasisState half = amps_.size() >> 1;
    for (BasisState k = 0; k < half; ++k) {
        const BasisState i0 = insert_zero(k, target);
        if ((i0 & control_mask) != control_mask) {
            continue;
        }
        const BasisState i1 = i0 | stride;
        const Amplitude a0 = amps_[i0];
        const Amplitude a1 = amps_[i1];
        amps_[i0] = m[0][0] * a0 + m[0][1] * a1;
        amps_[i1] = m[1][0] * a0 + m[1][1] * a1;
    }
}

void StateVector::apply_x(Qubit target, BasisState control_mask) {
    const BasisState stride = BasisState{1} << target;
    const BasisState half = amps_.size() >> 1;
    for (BasisState k = 0; k < half; ++k) {
        const BasisState i0 = insert_zero(k, target);
        if ((i0 & control_mask) == control_mask) {
            std::swap(amps_[i0], amps_[i0 | stride]);
        }
    }
}

void StateVector::apply_phase(BasisState mask, Amplitude phase) {
    for (BasisState i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] *= phase;
        }
    }
}

void StateVector::apply(const Gate &gate) {
    gate.validate(num_qubits_);
    const Qubit t = gate.targets.front();
    const BasisState controls = mask_of(gate.controls);
    const BasisState target_bit = BasisState{1} << t;
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
        apply_x(t, controls);
        break;
    case GateKind::H: {
        static constexpr Amplitude h[2][2] = {{kInvSqrt2, kInvSqrt2},
                                              {kInvSqrt2, -kInvSqrt2}};
        apply_single(t, 0, h);
        break;
    }
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::MCZ:
        apply_phase(controls | target_bit, Amplitude{-1.0, 0.0});
        break;
    case GateKind::S:
        apply_phase(target_bit, Amplitude{0.0, 1.0});
        break;
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.num_qubits() != num_qubits_) {
        throw ValidationError("circuit width " +
                              std::to_string(circuit.num_qubits()) +
                              " does not match state width " +
                              std::to_string(num_qubits_));
    }
    for (const Gate &g : circuit.gates()) {
        apply(g);
    }
}

void StateVector::apply_pauli(Qubit q, Pauli p) {
    if (q >= num_qubits_) {
        throw ValidationError("pauli on qubit " + std::to_string(q) +
                              " out of range");
    }
    const BasisState bit = BasisState{1} << q;
    switch (p) {
    case Pauli::I:
        break;
    case Pauli::X:
        apply_x(q, 0);
        break;
    case Pauli::Y: {
        static constexpr Amplitude y[2][2] = {{0.0, {0.0, -1.0}},
                                              {{0.0, 1.0}, 0.0}};
        apply_single(q, 0, y);
        break;
    }
    case Pauli::Z:
        apply_phase(bit, Amplitude{-1.0, 0.0});
        break;
    }
}

StateVector new_zero_state(std::size_t num_qubits) {
    return StateVector(num_qubits);
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit &circuit) {
    state.apply(circuit);
    return state;
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> p;
    p.reserve(state.size());
    for (const Amplitude &a : state.amplitudes()) {
        p.push_back(std::norm(a));
    }
    return p;
}

} // namespace hepgrover
