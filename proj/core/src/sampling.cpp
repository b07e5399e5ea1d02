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

#include "hepgrover/sampling.hpp"

#include "hepgrover/errors.hpp"

#include <algorithm>

namespace hepgrover {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

DiscreteSampler::DiscreteSampler(std::span<const double> weights) {
    cumulative_.reserve(weights.size());
    double running = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0.0) {
            running += weights[i];
            last_nonzero_ = i;
        }
        cumulative_.push_back(running);
    }
    if (running <= 0.0) {
        throw ValidationError("cannot sample from an all-zero distribution");
    }
}

BasisState DiscreteSampler::draw(std::mt19937_64 &rng) const {
    const double u = uniform01(rng) * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto index = static_cast<BasisState>(it - cumulative_.begin());
    // Rounding can leave u at the very top of the table.
    return std::min(index, last_nonzero_);
}

Histogram sample_distribution(std::span<const double> probs,
                              std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    const DiscreteSampler sampler(probs);
    Histogram counts;
    for (std::uint64_t first = 0, stream = 0; first < shots;
         first += kShotsPerStream, ++stream) {
        std::mt19937_64 rng(derive_seed(seed, stream));
        const std::uint64_t batch = std::min(kShotsPerStream, shots - first);
        for (std::uint64_t s = 0; s < batch; ++s) {
            ++counts[sampler.draw(rng)];
        }
    }
    return counts;
}

Histogram sample(const StateVector &state, std::uint64_t shots,
                 std::uint64_t seed) {
    const auto probs = probabilities(state);
    return sample_distribution(probs, shots, seed);
}

std::string basis_label(BasisState state, std::size_t num_qubits) {
    std::string label(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((state >> q) & 1U) {
            label[num_qubits - 1 - q] = '1';
        }
    }
    return label;
}

BasisState parse_basis_label(const std::string &label) {
    if (label.empty() || label.size() > 64) {
        throw ValidationError("basis label must hold 1..64 binary digits");
    }
    BasisState state = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw ValidationError("basis label '" + label +
                                  "' contains a non-binary character");
        }
        state = (state << 1) | static_cast<BasisState>(c - '0');
    }
    return state;
}

std::uint64_t total_shots(const Histogram &counts) noexcept {
    std::uint64_t total = 0;
    for (const auto &[state, n] : counts) {
        total += n;
    }
    return total;
}

} // namespace hepgrover
