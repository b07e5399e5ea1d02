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

#include "hepgrover/report.hpp"

#include "hepgrover/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string_view>

namespace hepgrover {
namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string format_report_jsonl(const std::vector<SearchReport> &reports) {
    std::string out;
    for (const SearchReport &r : reports) {
        nlohmann::json counts = nlohmann::json::object();
        for (const auto &[state, n] : r.counts) {
            counts[basis_label(state, kEncodedQubits)] = n;
        }
        nlohmann::json selections = nlohmann::json::array();
        for (const Selection &s : r.selections) {
            selections.push_back({{"slot", s.slot},
                                  {"row", s.row},
                                  {"event_id", s.event_id},
                                  {"pt", s.pt},
                                  {"state", basis_label(s.state, kEncodedQubits)},
                                  {"fraction", s.fraction}});
        }
        const nlohmann::json line = {
            {"group_id", r.group_id},
            {"pass", r.pass},
            {"multi_hit", r.multi_hit},
            {"scheme", static_cast<int>(r.scheme)},
            {"shots", r.shots},
            {"threshold", r.threshold},
            {"counts", std::move(counts)},
            {"peak",
             {{"state", basis_label(r.peak_state, kEncodedQubits)},
              {"fraction", r.peak_fraction}}},
            {"sub_threshold_peak", r.sub_threshold_peak},
            {"selections", std::move(selections)},
        };
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::string render_histogram_text(const Histogram &counts,
                                  std::size_t num_qubits,
                                  const std::set<BasisState> &highlight,
                                  std::size_t bar_width) {
    const std::uint64_t shots = total_shots(counts);
    std::uint64_t peak = 0;
    for (const auto &[state, n] : counts) {
        peak = std::max(peak, n);
    }
    std::ostringstream out;
    for (const auto &[state, n] : counts) {
        if (n == 0) {
            continue;
        }
        const auto bar = static_cast<std::size_t>(
            static_cast<double>(bar_width) * static_cast<double>(n) /
                static_cast<double>(peak) +
            0.5);
        out << "  |" << basis_label(state, num_qubits) << "> "
            << std::string(std::max<std::size_t>(bar, 1), '#')
            << std::string(bar_width - std::min(bar, bar_width), ' ') << ' '
            << n << " (" << fixed(static_cast<double>(n) /
                                      static_cast<double>(shots),
                                  4)
            << ')' << (highlight.count(state) ? " *" : "") << '\n';
    }
    return out.str();
}

std::string render_histogram_svg(const Histogram &counts, std::size_t num_qubits,
                                  const std::string &title) {
    if (num_qubits == 0 || num_qubits > 10) {
        throw ValidationError("svg histogram supports 1..10 qubits");
    }
    const std::size_t bins = std::size_t{1} << num_qubits;
    const std::uint64_t shots = std::max<std::uint64_t>(1, total_shots(counts));
    constexpr int kBar = 18;
    constexpr int kGap = 4;
    constexpr int kPlotH = 240;
    constexpr int kMarginL = 50;
    constexpr int kMarginB = 70;
    constexpr int kMarginT = 30;
    const int width = kMarginL + static_cast<int>(bins) * (kBar + kGap) + 20;
    const int height = kMarginT + kPlotH + kMarginB;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" font-family=\"monospace\" "
        << "font-size=\"10\">\n"
        << "<text x=\"" << kMarginL << "\" y=\"18\" font-size=\"13\">" << xml_escape(title)
        << "</text>\n"
        << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT + kPlotH
        << "\" x2=\"" << width - 10 << "\" y2=\"" << kMarginT + kPlotH
        << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const int y = kMarginT + kPlotH - tick * kPlotH / 4;
        svg << "<text x=\"" << kMarginL - 6 << "\" y=\"" << y + 3
            << "\" text-anchor=\"end\">" << fixed(tick * 0.25, 2)
            << "</text>\n";
    }
    for (std::size_t b = 0; b < bins; ++b) {
        const auto it = counts.find(b);
        const double frac =
            it == counts.end()
                ? 0.0
                : static_cast<double>(it->second) / static_cast<double>(shots);
        const int h = static_cast<int>(frac * kPlotH + 0.5);
        const int x = kMarginL + static_cast<int>(b) * (kBar + kGap) + kGap;
        svg << "<rect x=\"" << x << "\" y=\"" << kMarginT + kPlotH - h
            << "\" width=\"" << kBar << "\" height=\"" << h
            << "\" fill=\"#4063a8\"/>\n"
            << "<text transform=\"translate(" << x + kBar / 2 + 3 << ","
            << kMarginT + kPlotH + 6 << ") rotate(90)\">"
            << basis_label(b, num_qubits) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_reports_text(const std::vector<SearchReport> &reports) {
    std::ostringstream out;
    for (const SearchReport &r : reports) {
        out << "group " << r.group_id;
        if (r.multi_hit) {
            out << " pass " << r.pass << " (multi-hit)";
        }
        out << ": scheme " << static_cast<int>(r.scheme) << ", " << r.shots
            << " shots, peak |" << basis_label(r.peak_state, kEncodedQubits)
            << "> at " << fixed(r.peak_fraction, 4) << '\n';
        std::set<BasisState> selected;
        for (const Selection &s : r.selections) {
            selected.insert(s.state);
        }
        out << render_histogram_text(r.counts, kEncodedQubits, selected);
        for (const Selection &s : r.selections) {
            out << "  selected row " << s.row << " (event " << s.event_id
                << ", pt " << fixed(s.pt, 3) << " GeV) with probability "
                << fixed(s.fraction, 4) << '\n';
        }
        if (r.sub_threshold_peak) {
            out << "  peak below threshold " << fixed(r.threshold, 2)
                << ": not selected\n";
        }
    }
    return out.str();
}

} // namespace hepgrover
