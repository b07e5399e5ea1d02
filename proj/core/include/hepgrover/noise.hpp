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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hepgrover {

/// Error probabilities per gate class plus a symmetric readout flip.
struct NoiseProfile {
    double p1{0.0};      ///< gates touching one qubit (x, h, z, s)
    double p2{0.0};      ///< gates touching two qubits (cx, cz, 1-control mcz)
    double p_mcz{0.0};   ///< gates touching three or more (ccx, mcz)
    double readout{0.0}; ///< per-bit flip at measurement
    std::string label;

    /// Throws ConfigError unless every probability is in [0, 1].
    void validate() const;
    [[nodiscard]] bool is_ideal() const noexcept;
    /// Every probability multiplied by factor, clamped to [0, 1].
    [[nodiscard]] NoiseProfile scaled(double factor) const;

    friend bool operator==(const NoiseProfile &, const NoiseProfile &) = default;
};

/**
 * Parses the flat profile format:
 *
 *     # comment
 *     label   = vigo-like
 *     p1      = 0.001
 *     p2      = 0.01
 *     p_mcz   = 0.03
 *     readout = 0.02
 *
 * Missing probabilities default to 0. Unknown keys, duplicate keys and
 * malformed numbers raise ParseError; out-of-range values raise ConfigError.
 */
[[nodiscard]] NoiseProfile parse_noise_profile(std::string_view text);
[[nodiscard]] NoiseProfile load_noise_profile(const std::filesystem::path &path);
[[nodiscard]] std::string format_noise_profile(const NoiseProfile &profile);

/// Illustrative profiles shipped with the project: "ideal", "vigo-like",
/// "melbourne-like". They are not calibration data for any device.
[[nodiscard]] std::optional<NoiseProfile> builtin_profile(std::string_view name);
[[nodiscard]] std::vector<std::string> builtin_profile_names();

enum class GateClass { Single, Two, Multi };

/// Classified by the number of qubits the gate touches.
[[nodiscard]] GateClass gate_class(const Gate &gate) noexcept;
[[nodiscard]] double error_probability(const NoiseProfile &profile,
                                       const Gate &gate) noexcept;

struct NoisyRunResult {
    Histogram counts;
    std::uint64_t trajectories{0};
    double marked_fraction{0.0};
};

/**
 * Monte-Carlo trajectory simulation of circuit under profile.
 *
 * After every gate, with the probability of its class, each qubit the gate
 * touched is hit by a Pauli drawn uniformly from {I, X, Y, Z}; at p = 1 this
 * leaves the qubit maximally mixed. Each measured bit is then flipped with
 * probability profile.readout.
 *
 * Shot s draws from its own generator seeded with derive_seed(seed, s), so
 * counts depend only on the inputs and never on workers. Trajectories with no
 * error reuse the noiseless output distribution. workers == 0 picks the
 * hardware concurrency.
 */
[[nodiscard]] NoisyRunResult noisy_run(const Circuit &circuit,
                                       const std::set<BasisState> &marked,
                                       const NoiseProfile &profile,
                                       std::uint64_t shots, std::uint64_t seed,
                                       unsigned workers = 1);

struct GateCountReport {
    std::size_t single{0};
    std::size_t two{0};
    std::size_t multi{0};
    /// prod over classes of (1 - p_class)^count.
    double survival{1.0};

    [[nodiscard]] std::size_t total() const noexcept {
        return single + two + multi;
    }
};

[[nodiscard]] GateCountReport gate_count_report(const Circuit &circuit,
                                                const NoiseProfile &profile = {});

} // namespace hepgrover
