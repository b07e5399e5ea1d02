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

#include "hepgrover/circuit.hpp"

#include "hepgrover/errors.hpp"

#include <algorithm>

namespace hepgrover {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::Z:
        return "z";
    case GateKind::S:
        return "s";
    case GateKind::CX:
        return "cx";
    case GateKind::CZ:
        return "cz";
    case GateKind::CCX:
        return "ccx";
    case GateKind::MCZ:
        return "mcz";
    }
    return "?";
}

std::optional<std::size_t> fixed_control_count(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Z:
    case GateKind::S:
        return 0;
    case GateKind::CX:
    case GateKind::CZ:
        return 1;
    case GateKind::CCX:
        return 2;
    case GateKind::MCZ:
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Qubit> Gate::qubits() const {
    std::vector<Qubit> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    return all;
}

void Gate::validate(std::size_t num_qubits) const {
    const std::string name(gate_name(kind));
    if (targets.size() != 1) {
        throw ValidationError(name + ": expected exactly one target, got " +
                              std::to_string(targets.size()));
    }
    if (const auto expected = fixed_control_count(kind)) {
        if (controls.size() != *expected) {
            throw ValidationError(name + ": expected " +
                                  std::to_string(*expected) +
                                  " control(s), got " +
                                  std::to_string(controls.size()));
        }
    } else if (controls.empty()) {
        throw ValidationError(name + ": needs at least one control");
    }
    auto all = qubits();
    for (Qubit q : all) {
        if (q >= num_qubits) {
            throw ValidationError(name + ": qubit " + std::to_string(q) +
                                  " out of range for " +
                                  std::to_string(num_qubits) + " qubit(s)");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw ValidationError(name + ": repeated qubit index");
    }
}

Circuit::Circuit(std::size_t num_qubits, std::string label)
    : num_qubits_(num_qubits), label_(std::move(label)) {}

Circuit &Circuit::add(Gate gate) {
    gate.validate(num_qubits_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw ValidationError("cannot append a " +
                              std::to_string(other.num_qubits_) +
                              "-qubit circuit to a " +
                              std::to_string(num_qubits_) + "-qubit circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit &Circuit::append_mapped(const Circuit &other,
                                std::span<const Qubit> wires) {
    if (wires.size() != other.num_qubits_) {
        throw ValidationError("wire map has " + std::to_string(wires.size()) +
                              " entries for a " +
                              std::to_string(other.num_qubits_) +
                              "-qubit circuit");
    }
    for (Gate g : other.gates_) {
        for (Qubit &q : g.targets) {
            q = wires[q];
        }
        for (Qubit &q : g.controls) {
            q = wires[q];
        }
        add(std::move(g));
    }
    return *this;
}

void Circuit::validate() const {
    for (const Gate &g : gates_) {
        g.validate(num_qubits_);
    }
}

} // namespace hepgrover
