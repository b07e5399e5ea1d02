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

#include "hepgrover/encoding.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hepgrover {

struct DatasetOptions {
    /// lep_pt column is in MeV and is divided by 1000 on ingestion.
    bool pt_in_mev{false};
};

/**
 * Reads the lepton table.
 *
 * Format: comma-separated, first line is a header naming at least the columns
 * event_id, instance and lep_pt (any order, extra columns ignored). Each
 * following line is one record; its 0-based row is its line number minus two.
 * instance must be an integer in 0..3 and lep_pt a finite number > 0.
 * Trailing empty lines are ignored; any other deviation raises ParseError
 * naming the line (and column where one applies).
 */
[[nodiscard]] std::vector<LeptonRecord>
parse_dataset(std::string_view text, const DatasetOptions &options = {});

/// Throws ConfigError if the file cannot be opened.
[[nodiscard]] std::vector<LeptonRecord>
load_dataset(const std::filesystem::path &path,
             const DatasetOptions &options = {});

/// Writes records back in the same format (pt in GeV).
[[nodiscard]] std::string format_dataset(const std::vector<LeptonRecord> &records);

} // namespace hepgrover
