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

#include "hepgrover/encoding.hpp"

#include "hepgrover/errors.hpp"
#include "hepgrover/grover.hpp"
#include "hepgrover/state_vector.hpp"

#include <algorithm>
#include <array>

namespace hepgrover {
namespace {

// Scheme 1 wiring.
constexpr std::array<Qubit, 2> kV1Index{0, 1};
constexpr std::array<Qubit, 2> kV1Value{2, 3};
constexpr Qubit kV1Ancilla = 4;

// Scheme 2 wiring.
constexpr std::array<Qubit, 2> kV2Value{0, 1};
constexpr std::array<Qubit, 3> kV2Index{2, 3, 4};

Scheme scheme_for_size(std::size_t size) {
    if (size == 4) {
        return Scheme::IndexSearch;
    }
    if (size == 8) {
        return Scheme::BinaryIndex;
    }
    throw ValidationError("group of " + std::to_string(size) +
                          " records matches no encoding scheme");
}

void check_focus(const EventGroup &group, std::optional<std::size_t> focus) {
    if (!focus) {
        return;
    }
    if (*focus >= group.size() || group.is_padding(*focus) ||
        group.records[*focus].instance != kTargetInstance) {
        throw ValidationError("focus slot " + std::to_string(*focus) +
                              " does not hold an instance-3 record");
    }
}

// Instance value each slot is loaded with. Filler rows load 0; with a focus,
// every other instance-3 slot is masked to 0.
std::vector<int> loaded_values(const EventGroup &group,
                               std::optional<std::size_t> focus) {
    std::vector<int> values(group.size(), 0);
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (group.is_padding(i)) {
            continue;
        }
        const int v = group.records[i].instance;
        if (focus && v == kTargetInstance && i != *focus) {
            continue;
        }
        values[i] = v;
    }
    return values;
}

// |i>|00> -> |i>|d_i> on the scheme-1 registers. Self-inverse.
void load_values(Circuit &c, const std::vector<int> &values) {
    for (std::size_t slot = 0; slot < values.size(); ++slot) {
        const int d = values[slot];
        if (d == 0) {
            continue;
        }
        for (std::size_t b = 0; b < kV1Index.size(); ++b) {
            if (((slot >> b) & 1U) == 0) {
                c.x(kV1Index[b]);
            }
        }
        for (std::size_t b = 0; b < kV1Value.size(); ++b) {
            if ((d >> b) & 1) {
                c.ccx(kV1Index[0], kV1Index[1], kV1Value[b]);
            }
        }
        for (std::size_t b = 0; b < kV1Index.size(); ++b) {
            if (((slot >> b) & 1U) == 0) {
                c.x(kV1Index[b]);
            }
        }
    }
}

} // namespace

std::vector<std::size_t> EventGroup::target_slots() const {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!is_padding(i) && records[i].instance == kTargetInstance) {
            slots.push_back(i);
        }
    }
    return slots;
}

void EventGroup::validate(std::size_t expected_size) const {
    if (records.size() != expected_size ||
        padding_mask.size() != records.size()) {
        throw ValidationError("group " + std::to_string(group_id) + " holds " +
                              std::to_string(records.size()) +
                              " records; expected " +
                              std::to_string(expected_size));
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        const int inst = records[i].instance;
        if (inst < 0 || inst > kTargetInstance) {
            throw ValidationError("group " + std::to_string(group_id) +
                                  ": instance " + std::to_string(inst) +
                                  " outside 0..3");
        }
        if (padding_mask[i] && inst == kTargetInstance) {
            throw ValidationError("filler row carries instance 3");
        }
    }
}

std::size_t group_size(Scheme scheme) noexcept {
    return scheme == Scheme::IndexSearch ? 4 : 8;
}

Scheme scheme_from_int(int value) {
    if (value == 1) {
        return Scheme::IndexSearch;
    }
    if (value == 2) {
        return Scheme::BinaryIndex;
    }
    throw ConfigError("scheme must be 1 or 2, got " + std::to_string(value));
}

std::vector<EventGroup> group_records(const std::vector<LeptonRecord> &records,
                                      std::size_t group_size) {
    if (group_size != 4 && group_size != 8) {
        throw ValidationError("group size must be 4 or 8, got " +
                              std::to_string(group_size));
    }
    std::vector<EventGroup> groups;
    for (std::size_t first = 0; first < records.size(); first += group_size) {
        EventGroup g;
        g.group_id = groups.size();
        const std::size_t last = std::min(records.size(), first + group_size);
        g.records.assign(records.begin() + static_cast<std::ptrdiff_t>(first),
                         records.begin() + static_cast<std::ptrdiff_t>(last));
        g.padding_mask.assign(g.records.size(), false);
        while (g.records.size() < group_size) {
            g.records.push_back(LeptonRecord{-1, -1, 0, 0.0});
            g.padding_mask.push_back(true);
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

Circuit encode_v1(const EventGroup &group, std::optional<std::size_t> focus_slot) {
    group.validate(4);
    check_focus(group, focus_slot);
    const auto values = loaded_values(group, focus_slot);
    const auto marked = static_cast<std::size_t>(
        std::count(values.begin(), values.end(), kTargetInstance));
    const std::size_t rounds = marked == 0 ? 0 : optimal_iterations(2, marked);

    Circuit c(kEncodedQubits, "scheme1 group " + std::to_string(group.group_id));
    for (Qubit q : kV1Index) {
        c.h(q);
    }
    if (rounds > 0) {
        // Ancilla in |-> turns the value-11 Toffoli into a phase flip.
        c.x(kV1Ancilla).h(kV1Ancilla);
        const Circuit diffusion = diffusion_circuit(2);
        for (std::size_t k = 0; k < rounds; ++k) {
            load_values(c, values);
            c.ccx(kV1Value[0], kV1Value[1], kV1Ancilla);
            load_values(c, values);
            c.append_mapped(diffusion, kV1Index);
        }
    }
    load_values(c, values);
    if (rounds > 0) {
        c.h(kV1Ancilla).x(kV1Ancilla);
    }
    return c;
}

Circuit encode_v2(const EventGroup &group, std::optional<std::size_t> focus_slot) {
    group.validate(8);
    check_focus(group, focus_slot);
    std::optional<std::size_t> target = focus_slot;
    if (!target) {
        const auto slots = group.target_slots();
        if (slots.size() > 1) {
            throw ValidationError(
                "group " + std::to_string(group.group_id) + " has " +
                std::to_string(slots.size()) +
                " instance-3 records; encode each with an explicit focus slot");
        }
        if (!slots.empty()) {
            target = slots.front();
        }
    }

    Circuit c(kEncodedQubits, "scheme2 group " + std::to_string(group.group_id));
    if (target) {
        for (std::size_t b = 0; b < kV2Index.size(); ++b) {
            if ((*target >> b) & 1U) {
                c.x(kV2Index[b]);
            }
        }
    }
    for (Qubit q : kV2Value) {
        c.h(q);
    }
    if (target) {
        const Circuit oracle = oracle_circuit(2, {3});
        const Circuit diffusion = diffusion_circuit(2);
        for (std::size_t k = optimal_iterations(2, 1); k > 0; --k) {
            c.append_mapped(oracle, kV2Value);
            c.append_mapped(diffusion, kV2Value);
        }
    }
    return c;
}

BasisState target_state(Scheme scheme, std::size_t slot) noexcept {
    if (scheme == Scheme::IndexSearch) {
        return static_cast<BasisState>(slot) | (BasisState{3} << 2);
    }
    return BasisState{3} | (static_cast<BasisState>(slot) << 2);
}

DecodedState decode_state(Scheme scheme, BasisState state) noexcept {
    if (scheme == Scheme::IndexSearch) {
        return {static_cast<int>((state >> 2) & 3U),
                static_cast<std::size_t>(state & 3U)};
    }
    return {static_cast<int>(state & 3U),
            static_cast<std::size_t>((state >> 2) & 7U)};
}

std::vector<PlannedSearch> plan_group(const EventGroup &group, Scheme scheme) {
    group.validate(group_size(scheme));
    const auto slots = group.target_slots();
    auto encode = [&](std::optional<std::size_t> focus) {
        return scheme == Scheme::IndexSearch ? encode_v1(group, focus)
                                             : encode_v2(group, focus);
    };
    std::vector<PlannedSearch> plans;
    if (slots.empty()) {
        plans.push_back({encode(std::nullopt), std::nullopt, {}, false});
        return plans;
    }
    const bool multi = slots.size() > 1;
    for (std::size_t slot : slots) {
        plans.push_back(
            {encode(slot), slot, {target_state(scheme, slot)}, multi});
    }
    return plans;
}

SearchReport decode_report(const EventGroup &group, const Histogram &counts,
                           std::uint64_t shots, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw ValidationError("threshold must lie in (0, 1]");
    }
    if (shots == 0 || total_shots(counts) != shots) {
        throw ValidationError("histogram holds " +
                              std::to_string(total_shots(counts)) +
                              " shots; expected " + std::to_string(shots));
    }
    const Scheme scheme = scheme_for_size(group.size());
    SearchReport report;
    report.group_id = group.group_id;
    report.scheme = scheme;
    report.shots = shots;
    report.threshold = threshold;
    report.counts = counts;

    const BasisState limit = BasisState{1} << kEncodedQubits;
    std::uint64_t peak_count = 0;
    for (const auto &[state, count] : counts) {
        if (state >= limit) {
            throw ValidationError("measured state " + std::to_string(state) +
                                  " does not fit five qubits");
        }
        if (count > peak_count) {
            peak_count = count;
            report.peak_state = state;
        }
    }
    report.peak_fraction =
        static_cast<double>(peak_count) / static_cast<double>(shots);

    auto reportable = [&](const DecodedState &d) {
        return d.value == kTargetInstance && d.slot < group.size() &&
               !group.is_padding(d.slot);
    };
    for (const auto &[state, count] : counts) {
        const double fraction =
            static_cast<double>(count) / static_cast<double>(shots);
        const DecodedState d = decode_state(scheme, state);
        if (fraction < threshold || !reportable(d)) {
            continue;
        }
        const LeptonRecord &r = group.records[d.slot];
        report.selections.push_back(
            {d.slot, r.row, r.event_id, r.pt, state, fraction});
    }
    report.sub_threshold_peak =
        report.peak_fraction < threshold &&
        reportable(decode_state(scheme, report.peak_state));
    return report;
}

std::vector<SearchReport> search_database(const std::vector<LeptonRecord> &records,
                                          const SearchOptions &options) {
    if (options.shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    if (options.noise) {
        options.noise->validate();
    }
    std::vector<SearchReport> reports;
    for (const EventGroup &group :
         group_records(records, group_size(options.scheme))) {
        const auto plans = plan_group(group, options.scheme);
        for (std::size_t pass = 0; pass < plans.size(); ++pass) {
            const PlannedSearch &plan = plans[pass];
            const std::uint64_t run_seed =
                derive_seed(derive_seed(options.seed, group.group_id), pass);
            Histogram counts =
                options.noise
                    ? noisy_run(plan.circuit, plan.marked, *options.noise,
                                options.shots, run_seed)
                          .counts
                    : sample(apply_circuit(StateVector(kEncodedQubits),
                                           plan.circuit),
                             options.shots, run_seed);
            SearchReport report =
                decode_report(group, counts, options.shots, options.threshold);
            report.pass = pass;
            report.multi_hit = plan.multi_hit;
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

} // namespace hepgrover
