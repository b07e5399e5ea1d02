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
#include "hepgrover/encoding.hpp"
#include "hepgrover/noise.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hepgrover::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kConfigError = 3,
    kInternalError = 4,
};

struct RunConfig {
    std::filesystem::path dataset;
    bool pt_in_mev{false};
    int scheme{2};
    std::uint64_t shots{kDefaultShots};
    std::uint64_t seed{0};
    double threshold{kDefaultThreshold};
    /// Bundled profile name or path to a profile file.
    std::optional<std::string> noise;
    /// JSON-lines report; stdout only when empty.
    std::filesystem::path output;
    /// Directory receiving one .qasm file per planned search.
    std::optional<std::filesystem::path> emit_circuit;
    std::optional<std::filesystem::path> svg;

    /// Throws ConfigError.
    void validate() const;
};

struct DemoConfig {
    std::size_t qubits{3};
    std::set<BasisState> marked;
    /// Explicit iteration count; optimal_iterations() when unset.
    std::optional<std::size_t> iterations;
    /// Inclusive [first, last] iteration sweep; emits CSV curve data.
    std::optional<std::pair<std::size_t, std::size_t>> sweep;
    std::uint64_t shots{kDefaultShots};
    std::uint64_t seed{0};
    std::filesystem::path output;
    std::optional<std::filesystem::path> svg;
};

struct EmitConfig {
    std::filesystem::path output;
    // Either a dataset group ...
    std::optional<std::filesystem::path> dataset;
    bool pt_in_mev{false};
    int scheme{2};
    std::size_t group{0};
    std::size_t pass{0};
    // ... or a plain Grover problem.
    std::size_t qubits{3};
    std::set<BasisState> marked;
    std::optional<std::size_t> iterations;
};

struct NoiseSimConfig {
    std::optional<std::filesystem::path> circuit;
    std::optional<std::filesystem::path> dataset;
    bool pt_in_mev{false};
    int scheme{2};
    std::size_t group{0};
    std::set<BasisState> marked;
    std::string noise{"vigo-like"};
    std::uint64_t shots{kDefaultShots};
    std::uint64_t seed{0};
    std::filesystem::path output;
};

/// Bundled profile by name, else a profile file. Throws ConfigError.
[[nodiscard]] NoiseProfile resolve_noise_profile(const std::string &name_or_path);

/// Parses "5", "0b101" or "|101>" into a basis state index.
[[nodiscard]] BasisState parse_state_token(const std::string &token);

/// Each command writes human-readable output to out and diagnostics to err,
/// and returns an ExitCode. Library exceptions are mapped: ParseError -> 2,
/// ConfigError / ValidationError / CapacityError / UndefinedSearchError -> 3,
/// anything else -> 4.
int run_search_command(const RunConfig &config, std::ostream &out,
                       std::ostream &err);
int demo_grover_command(const DemoConfig &config, std::ostream &out,
                        std::ostream &err);
int emit_circuit_command(const EmitConfig &config, std::ostream &out,
                         std::ostream &err);
int noise_sim_command(const NoiseSimConfig &config, std::ostream &out,
                      std::ostream &err);

/// Full command line: "hepgrover <subcommand> [flags]".
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace hepgrover::cli
