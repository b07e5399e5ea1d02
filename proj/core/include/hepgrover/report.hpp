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
#include "hepgrover/sampling.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hepgrover {

/**
 * One JSON object per report, newline-terminated, keys sorted:
 *
 *     {"counts":{"01111":8192},"group_id":3,"multi_hit":false,"pass":0,
 *      "peak":{"fraction":1.0,"state":"01111"},"scheme":2,
 *      "selections":[{"event_id":7,"fraction":1.0,"pt":31.5,"row":27,
 *                     "slot":3,"state":"01111"}],
 *      "shots":8192,"sub_threshold_peak":false,"threshold":0.8}
 *
 * States are five-character kets, most-significant qubit first. The output
 * is a pure function of the reports.
 */
[[nodiscard]] std::string format_report_jsonl(const std::vector<SearchReport> &reports);

/// Text bar chart of the non-empty bins, one line per state in ascending
/// order. States in highlight get a trailing '*'.
[[nodiscard]] std::string render_histogram_text(const Histogram &counts,
                                                std::size_t num_qubits,
                                                const std::set<BasisState> &highlight = {},
                                                std::size_t bar_width = 40);

/// Static SVG bar chart over all 2^n states (n <= 10).
[[nodiscard]] std::string render_histogram_svg(const Histogram &counts,
                                               std::size_t num_qubits,
                                               const std::string &title);

/// Human-readable summary: per report a heading, the histogram and the
/// selected rows.
[[nodiscard]] std::string render_reports_text(const std::vector<SearchReport> &reports);

} // namespace hepgrover
