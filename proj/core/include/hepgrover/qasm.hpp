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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace hepgrover {

/// Clean ancillas the emitter needs for this circuit: max(0, controls - 2)
/// over its MCZ gates.
[[nodiscard]] std::size_t emitted_ancillas(const Circuit &circuit);

/**
 * OpenQASM 2.0 text for circuit (grammar in docs/circuit-format.md).
 *
 * Gates map one-to-one onto x, h, z, s, cx, cz, ccx. MCZ is decomposed: one
 * control becomes cz; two become h/ccx/h on the target; k >= 3 controls use a
 * Toffoli ladder into a second register anc[k-2] that is uncomputed back to
 * |0>. The register q holds the circuit's qubits, so the emitted program
 * reproduces the original distribution on q with anc left in |0>.
 */
[[nodiscard]] std::string emit_circuit_text(const Circuit &circuit);

/// emit_circuit_text() written atomically to path.
void write_circuit_text(const Circuit &circuit,
                        const std::filesystem::path &path);

/**
 * Parses the emitted subset back into a Circuit.
 *
 * Quantum registers are laid out in declaration order (q first, then anc).
 * A leading "// circuit: <label>" comment restores the label. Syntax errors
 * raise ParseError with line and column; unknown gate names raise ParseError
 * naming the token; out-of-range qubit references raise ValidationError.
 */
[[nodiscard]] Circuit parse_circuit_text(std::string_view text);
[[nodiscard]] Circuit load_circuit_text(const std::filesystem::path &path);

} // namespace hepgrover
