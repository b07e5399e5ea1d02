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

#include "hepgrover/noise.hpp"

#include "hepgrover/errors.hpp"
#include "hepgrover/state_vector.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace hepgrover {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void check_probability(std::string_view name, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("noise profile: " + std::string(name) + " = " +
                          std::to_string(p) + " is not a probability");
    }
}

struct InjectedError {
    std::size_t gate;
    std::vector<std::pair<Qubit, Pauli>> paulis;
};

// One trajectory's error pattern, drawn before any simulation so that the
// draw order is fixed by the circuit alone.
std::vector<InjectedError> draw_errors(const Circuit &circuit,
                                       const std::vector<double> &gate_p,
                                       std::mt19937_64 &rng) {
    std::vector<InjectedError> out;
    const auto &gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
        if (gate_p[g] <= 0.0 || uniform01(rng) >= gate_p[g]) {
            continue;
        }
        InjectedError err{g, {}};
        for (Qubit q : gates[g].qubits()) {
            const auto p = static_cast<Pauli>(rng() % 4);
            if (p != Pauli::I) {
                err.paulis.emplace_back(q, p);
            }
        }
        if (!err.paulis.empty()) {
            out.push_back(std::move(err));
        }
    }
    return out;
}

BasisState run_trajectory(const Circuit &circuit,
                          const std::vector<InjectedError> &errors,
                          std::mt19937_64 &rng) {
    StateVector state(circuit.num_qubits());
    auto next = errors.begin();
    const auto &gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
        state.apply(gates[g]);
        for (; next != errors.end() && next->gate == g; ++next) {
            for (const auto &[q, p] : next->paulis) {
                state.apply_pauli(q, p);
            }
        }
    }
    const auto probs = probabilities(state);
    return DiscreteSampler(probs).draw(rng);
}

} // namespace

void NoiseProfile::validate() const {
    check_probability("p1", p1);
    check_probability("p2", p2);
    check_probability("p_mcz", p_mcz);
    check_probability("readout", readout);
}

bool NoiseProfile::is_ideal() const noexcept {
    return p1 == 0.0 && p2 == 0.0 && p_mcz == 0.0 && readout == 0.0;
}

NoiseProfile NoiseProfile::scaled(double factor) const {
    auto clamp = [factor](double p) { return std::clamp(p * factor, 0.0, 1.0); };
    return {clamp(p1), clamp(p2), clamp(p_mcz), clamp(readout),
            label + " x" + std::to_string(factor)};
}

NoiseProfile parse_noise_profile(std::string_view text) {
    NoiseProfile profile;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = trim(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = trim(line.substr(0, hash));
        }
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) {
            throw ParseError("duplicate key '" + key + "'", line_no);
        }
        if (key == "label") {
            profile.label = std::string(value);
            continue;
        }
        double *slot = key == "p1"        ? &profile.p1
                       : key == "p2"      ? &profile.p2
                       : key == "p_mcz"   ? &profile.p_mcz
                       : key == "readout" ? &profile.readout
                                          : nullptr;
        if (slot == nullptr) {
            throw ParseError("unknown key '" + key + "'", line_no);
        }
        double parsed = 0.0;
        const auto [ptr, ec] =
            std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || ptr != value.data() + value.size()) {
            throw ParseError("malformed number '" + std::string(value) +
                                 "' for key '" + key + "'",
                             line_no);
        }
        *slot = parsed;
    }
    profile.validate();
    return profile;
}

NoiseProfile load_noise_profile(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open noise profile " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_noise_profile(buf.str());
}

std::string format_noise_profile(const NoiseProfile &profile) {
    std::ostringstream out;
    out.precision(17);
    out << "label = " << profile.label << '\n'
        << "p1 = " << profile.p1 << '\n'
        << "p2 = " << profile.p2 << '\n'
        << "p_mcz = " << profile.p_mcz << '\n'
        << "readout = " << profile.readout << '\n';
    return out.str();
}

std::optional<NoiseProfile> builtin_profile(std::string_view name) {
    if (name == "ideal") {
        return NoiseProfile{0.0, 0.0, 0.0, 0.0, "ideal"};
    }
    if (name == "vigo-like") {
        return NoiseProfile{0.001, 0.01, 0.03, 0.02, "vigo-like"};
    }
    if (name == "melbourne-like") {
        return NoiseProfile{0.003, 0.03, 0.08, 0.05, "melbourne-like"};
    }
    return std::nullopt;
}

std::vector<std::string> builtin_profile_names() {
    return {"ideal", "vigo-like", "melbourne-like"};
}

GateClass gate_class(const Gate &gate) noexcept {
    const std::size_t arity = gate.targets.size() + gate.controls.size();
    if (arity <= 1) {
        return GateClass::Single;
    }
    return arity == 2 ? GateClass::Two : GateClass::Multi;
}

double error_probability(const NoiseProfile &profile,
                         const Gate &gate) noexcept {
    switch (gate_class(gate)) {
    case GateClass::Single:
        return profile.p1;
    case GateClass::Two:
        return profile.p2;
    case GateClass::Multi:
        return profile.p_mcz;
    }
    return 0.0;
}

NoisyRunResult noisy_run(const Circuit &circuit,
                         const std::set<BasisState> &marked,
                         const NoiseProfile &profile, std::uint64_t shots,
                         std::uint64_t seed, unsigned workers) {
    profile.validate();
    circuit.validate();
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    const std::size_t n = circuit.num_qubits();

    std::vector<double> gate_p;
    gate_p.reserve(circuit.size());
    for (const Gate &g : circuit.gates()) {
        gate_p.push_back(error_probability(profile, g));
    }
    const StateVector ideal = apply_circuit(StateVector(n), circuit);
    const auto ideal_probs = probabilities(ideal);
    const DiscreteSampler ideal_sampler(ideal_probs);

    auto run_range = [&](std::uint64_t first, std::uint64_t last) {
        Histogram local;
        for (std::uint64_t shot = first; shot < last; ++shot) {
            std::mt19937_64 rng(derive_seed(seed, shot));
            const auto errors = draw_errors(circuit, gate_p, rng);
            BasisState outcome = errors.empty()
                                     ? ideal_sampler.draw(rng)
                                     : run_trajectory(circuit, errors, rng);
            if (profile.readout > 0.0) {
                for (Qubit q = 0; q < n; ++q) {
                    if (uniform01(rng) < profile.readout) {
                        outcome ^= BasisState{1} << q;
                    }
                }
            }
            ++local[outcome];
        }
        return local;
    };

    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, shots / 256)));

    NoisyRunResult result;
    result.trajectories = shots;
    if (workers <= 1) {
        result.counts = run_range(0, shots);
    } else {
        std::vector<Histogram> partial(workers);
        {
            std::vector<std::jthread> pool;
            const std::uint64_t chunk = (shots + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::uint64_t first = w * chunk;
                const std::uint64_t last = std::min(shots, first + chunk);
                pool.emplace_back([&, w, first, last] {
                    partial[w] = run_range(first, last);
                });
            }
        }
        for (const auto &h : partial) {
            for (const auto &[state, count] : h) {
                result.counts[state] += count;
            }
        }
    }

    std::uint64_t hits = 0;
    for (BasisState m : marked) {
        if (const auto it = result.counts.find(m); it != result.counts.end()) {
            hits += it->second;
        }
    }
    result.marked_fraction =
        static_cast<double>(hits) / static_cast<double>(shots);
    return result;
}

GateCountReport gate_count_report(const Circuit &circuit,
                                  const NoiseProfile &profile) {
    circuit.validate();
    GateCountReport report;
    for (const Gate &g : circuit.gates()) {
        switch (gate_class(g)) {
        case GateClass::Single:
            ++report.single;
            break;
        case GateClass::Two:
            ++report.two;
            break;
        case GateClass::Multi:
            ++report.multi;
            break;
        }
    }
    report.survival =
        std::pow(1.0 - profile.p1, static_cast<double>(report.single)) *
        std::pow(1.0 - profile.p2, static_cast<double>(report.two)) *
        std::pow(1.0 - profile.p_mcz, static_cast<double>(report.multi));
    return report;
}

} // namespace hepgrover
