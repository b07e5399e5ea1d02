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
#include "hepgrover/noise.hpp"
#include "hepgrover/sampling.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace hepgrover {

/// One row of the lepton table. instance is the lepton's ordinal inside its
/// collision event (0..3); instance 3 means the event had four leptons.
struct LeptonRecord {
    std::int64_t row{0}; ///< 0-based database row; -1 for filler rows
    std::int64_t event_id{0};
    int instance{0};
    double pt{0.0}; ///< GeV

    friend bool operator==(const LeptonRecord &, const LeptonRecord &) = default;
};

inline constexpr int kTargetInstance = 3;

/// Fixed-size slice of the table handed to one search.
struct EventGroup {
    std::size_t group_id{0};
    std::vector<LeptonRecord> records;
    std::vector<bool> padding_mask; ///< true for synthetic filler rows

    [[nodiscard]] std::size_t size() const noexcept { return records.size(); }
    [[nodiscard]] bool is_padding(std::size_t slot) const {
        return padding_mask.at(slot);
    }
    /// Slots holding a real instance-3 record, ascending.
    [[nodiscard]] std::vector<std::size_t> target_slots() const;
    /// Throws ValidationError on a broken group (length mismatch, bad instance,
    /// padded slot with instance 3).
    void validate(std::size_t expected_size) const;
};

enum class Scheme {
    /// Groups of 4. q0,q1 index; q2,q3 instance value; q4 ancilla. The value
    /// is loaded per index with controlled X, marked by ancilla phase kickback,
    /// and the diffusion acts on the index register only.
    IndexSearch = 1,
    /// Groups of 8. q0,q1 instance value; q2,q3,q4 binary index written with
    /// X gates after a classical scan. Grover runs on the value register.
    BinaryIndex = 2,
};

[[nodiscard]] std::size_t group_size(Scheme scheme) noexcept;
/// Maps 1 -> IndexSearch, 2 -> BinaryIndex; throws ConfigError otherwise.
[[nodiscard]] Scheme scheme_from_int(int value);
/// Both schemes use five qubits.
inline constexpr std::size_t kEncodedQubits = 5;

/// Splits records in order into groups of group_size (4 or 8). The last group
/// is topped up with filler rows (instance 0, pt 0, row -1) flagged in
/// padding_mask.
[[nodiscard]] std::vector<EventGroup>
group_records(const std::vector<LeptonRecord> &records, std::size_t group_size);

/**
 * Scheme-1 circuit for a group of four.
 *
 * With no focus every instance-3 record is loaded as-is and the search uses
 * optimal_iterations(2, m). With focus_slot set, only that slot is loaded as
 * instance 3; other instance-3 slots are loaded as 0, so the circuit is a
 * single-target search. Measured state: |0 d_i i> (q4 q3q2 q1q0).
 */
[[nodiscard]] Circuit encode_v1(const EventGroup &group,
                                std::optional<std::size_t> focus_slot = {});

/**
 * Scheme-2 circuit for a group of eight.
 *
 * The target slot t is focus_slot when given, else the unique instance-3 slot.
 * X gates write t in binary onto q2 (bit 0), q3, q4; then one Grover round
 * marks |11> on q0,q1. With no instance-3 record the circuit is H on q0,q1
 * only. Throws ValidationError for a multi-hit group without focus_slot.
 */
[[nodiscard]] Circuit encode_v2(const EventGroup &group,
                                std::optional<std::size_t> focus_slot = {});

/// Basis state the encoded circuit should land on when slot holds the target.
[[nodiscard]] BasisState target_state(Scheme scheme, std::size_t slot) noexcept;

/// Value-register reading (instance in binary) and group-local index of a
/// measured five-qubit state.
struct DecodedState {
    int value{0};
    std::size_t slot{0};
};
[[nodiscard]] DecodedState decode_state(Scheme scheme, BasisState state) noexcept;

/// One circuit to run for a group. Groups with two or more instance-3 rows
/// yield one search per occurrence, each flagged multi_hit.
struct PlannedSearch {
    Circuit circuit;
    std::optional<std::size_t> target_slot;
    std::set<BasisState> marked;
    bool multi_hit{false};
};

[[nodiscard]] std::vector<PlannedSearch> plan_group(const EventGroup &group,
                                                    Scheme scheme);

struct Selection {
    std::size_t slot{0};
    std::int64_t row{0};
    std::int64_t event_id{0};
    double pt{0.0};
    BasisState state{0};
    double fraction{0.0};

    friend bool operator==(const Selection &, const Selection &) = default;
};

struct SearchReport {
    std::size_t group_id{0};
    Scheme scheme{Scheme::BinaryIndex};
    std::size_t pass{0};
    bool multi_hit{false};
    std::uint64_t shots{0};
    double threshold{0.80};
    Histogram counts;
    std::vector<Selection> selections;
    BasisState peak_state{0};
    double peak_fraction{0.0};
    /// Peak decodes to a real instance-3 slot but sits below threshold.
    bool sub_threshold_peak{false};

    friend bool operator==(const SearchReport &, const SearchReport &) = default;
};

inline constexpr double kDefaultThreshold = 0.80;
inline constexpr std::uint64_t kDefaultShots = 8192;

/// Selects every measured state with count / shots >= threshold whose value
/// register reads 11 and whose index maps to a real (non-filler) row. The
/// scheme follows from the group size. Throws ValidationError if counts do
/// not sum to shots, a state does not fit five qubits, or threshold is not in
/// (0, 1].
[[nodiscard]] SearchReport decode_report(const EventGroup &group,
                                         const Histogram &counts,
                                         std::uint64_t shots,
                                         double threshold = kDefaultThreshold);

struct SearchOptions {
    Scheme scheme{Scheme::BinaryIndex};
    std::uint64_t shots{kDefaultShots};
    std::uint64_t seed{0};
    double threshold{kDefaultThreshold};
    std::optional<NoiseProfile> noise;
};

/// Groups, encodes, simulates (noisy when options.noise is set) and decodes.
/// Reports come back ordered by (group_id, pass) and depend only on the
/// records and options.
[[nodiscard]] std::vector<SearchReport>
search_database(const std::vector<LeptonRecord> &records,
                const SearchOptions &options);

} // namespace hepgrover
