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
#include "hepgrover/state_vector.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>

namespace hepgrover {

/// Measured basis state -> number of shots. Ordered so that iteration and
/// serialisation are deterministic.
using Histogram = std::map<BasisState, std::uint64_t>;

/// Shots per independent RNG stream in sample().
inline constexpr std::uint64_t kShotsPerStream = 1024;

/// SplitMix64 finaliser over (seed, stream); used to split one user seed
/// into independent streams for shot batches and noisy trajectories.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed,
                                        std::uint64_t stream) noexcept;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
[[nodiscard]] inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Inverse-CDF lookup over a (not necessarily normalised) cumulative table.
class DiscreteSampler {
  public:
    explicit DiscreteSampler(std::span<const double> weights);
    [[nodiscard]] BasisState draw(std::mt19937_64 &rng) const;

  private:
    std::vector<double> cumulative_;
    BasisState last_nonzero_{0};
};

/**
 * Draws shots from the Born distribution of state.
 *
 * Shots are split into batches of kShotsPerStream, each driven by its own
 * generator seeded with derive_seed(seed, batch), so batches are independent
 * and the histogram depends only on (state, shots, seed).
 */
[[nodiscard]] Histogram sample(const StateVector &state, std::uint64_t shots,
                               std::uint64_t seed);

/// Same as sample() but over an explicit probability table.
[[nodiscard]] Histogram sample_distribution(std::span<const double> probs,
                                            std::uint64_t shots,
                                            std::uint64_t seed);

/// Ket label with the most-significant qubit first: basis_label(13, 5) is
/// "01101", i.e. q4 q3 q2 q1 q0.
[[nodiscard]] std::string basis_label(BasisState state, std::size_t num_qubits);

/// Inverse of basis_label(). Throws ValidationError on characters other than
/// '0'/'1' or an empty string.
[[nodiscard]] BasisState parse_basis_label(const std::string &label);

[[nodiscard]] std::uint64_t total_shots(const Histogram &counts) noexcept;

} // namespace hepgrover
