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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hepgrover {

using Qubit = std::size_t;

/// Index of a computational basis state; bit k is qubit k.
using BasisState = std::uint64_t;

enum class GateKind { X, H, Z, S, CX, CZ, CCX, MCZ };

/// Lower-case mnemonic ("x", "ccx", "mcz", ...).
[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;

/// Number of controls a kind requires, or nullopt for MCZ (one or more).
[[nodiscard]] std::optional<std::size_t>
fixed_control_count(GateKind kind) noexcept;

/**
 * One gate of the simulator's gate set.
 *
 * Every kind acts on exactly one target. Controlled kinds (CX, CZ, CCX, MCZ)
 * fire only when all control qubits are |1>. Z-type kinds are diagonal, so
 * for CZ and MCZ the control/target split is a naming convention only.
 */
struct Gate {
    GateKind kind{GateKind::X};
    std::vector<Qubit> targets;
    std::vector<Qubit> controls;

    static Gate x(Qubit q) { return {GateKind::X, {q}, {}}; }
    static Gate h(Qubit q) { return {GateKind::H, {q}, {}}; }
    static Gate z(Qubit q) { return {GateKind::Z, {q}, {}}; }
    static Gate s(Qubit q) { return {GateKind::S, {q}, {}}; }
    static Gate cx(Qubit control, Qubit target) {
        return {GateKind::CX, {target}, {control}};
    }
    static Gate cz(Qubit control, Qubit target) {
        return {GateKind::CZ, {target}, {control}};
    }
    static Gate ccx(Qubit c0, Qubit c1, Qubit target) {
        return {GateKind::CCX, {target}, {c0, c1}};
    }
    static Gate mcz(std::vector<Qubit> controls, Qubit target) {
        return {GateKind::MCZ, {target}, std::move(controls)};
    }

    /// Controls followed by targets.
    [[nodiscard]] std::vector<Qubit> qubits() const;

    /// Throws ValidationError unless arity matches the kind and all qubit
    /// indices are distinct and below num_qubits.
    void validate(std::size_t num_qubits) const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Ordered gate list over a fixed number of qubit lines.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits, std::string label = {});

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    /// Validates and appends.
    Circuit &add(Gate gate);
    /// Appends every gate of another circuit with the same width.
    Circuit &append(const Circuit &other);
    /// Appends other with its qubit q rewired to wires[q].
    Circuit &append_mapped(const Circuit &other, std::span<const Qubit> wires);

    Circuit &x(Qubit q) { return add(Gate::x(q)); }
    Circuit &h(Qubit q) { return add(Gate::h(q)); }
    Circuit &z(Qubit q) { return add(Gate::z(q)); }
    Circuit &s(Qubit q) { return add(Gate::s(q)); }
    Circuit &cx(Qubit c, Qubit t) { return add(Gate::cx(c, t)); }
    Circuit &cz(Qubit c, Qubit t) { return add(Gate::cz(c, t)); }
    Circuit &ccx(Qubit c0, Qubit c1, Qubit t) {
        return add(Gate::ccx(c0, c1, t));
    }
    Circuit &mcz(std::vector<Qubit> controls, Qubit t) {
        return add(Gate::mcz(std::move(controls), t));
    }

    /// Re-checks every gate against num_qubits.
    void validate() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t num_qubits_{0};
    std::vector<Gate> gates_;
    std::string label_;
};

} // namespace hepgrover
