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

#include "hepgrover/dataset.hpp"

#include "hepgrover/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace hepgrover {
namespace {

struct Field {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Field> split_line(std::string_view line) {
    std::vector<Field> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        const auto end = comma == std::string_view::npos ? line.size() : comma;
        std::string_view raw = line.substr(start, end - start);
        std::size_t column = start + 1;
        while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t')) {
            raw.remove_prefix(1);
            ++column;
        }
        while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t')) {
            raw.remove_suffix(1);
        }
        fields.push_back({raw, column});
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T parse_number(const Field &f, std::size_t line, const char *what) {
    T value{};
    const char *first = f.text.data();
    const char *last = first + f.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (f.text.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(std::string(what) + ": cannot parse '" +
                             std::string(f.text) + "'",
                         line, f.column);
    }
    return value;
}

} // namespace

std::vector<LeptonRecord> parse_dataset(std::string_view text,
                                        const DatasetOptions &options) {
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string(text)};
        for (std::string l; std::getline(in, l);) {
            if (!l.empty() && l.back() == '\r') {
                l.pop_back();
            }
            lines.push_back(std::move(l));
        }
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError("missing header line", 1);
    }

    std::optional<std::size_t> col_event;
    std::optional<std::size_t> col_instance;
    std::optional<std::size_t> col_pt;
    const auto header = split_line(lines.front());
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto name = header[i].text;
        auto claim = [&](std::optional<std::size_t> &slot) {
            if (slot) {
                throw ParseError("duplicate column '" + std::string(name) + "'",
                                 1, header[i].column);
            }
            slot = i;
        };
        if (name == "event_id") {
            claim(col_event);
        } else if (name == "instance") {
            claim(col_instance);
        } else if (name == "lep_pt") {
            claim(col_pt);
        }
    }
    if (!col_event || !col_instance || !col_pt) {
        throw ParseError("header must name event_id, instance and lep_pt", 1);
    }

    std::vector<LeptonRecord> records;
    records.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto fields = split_line(lines[i]);
        if (fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) +
                                 " columns, found " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        LeptonRecord r;
        r.row = static_cast<std::int64_t>(records.size());
        r.event_id =
            parse_number<std::int64_t>(fields[*col_event], line_no, "event_id");
        const auto &inst = fields[*col_instance];
        r.instance = parse_number<int>(inst, line_no, "instance");
        if (r.instance < 0 || r.instance > kTargetInstance) {
            throw ParseError("instance " + std::to_string(r.instance) +
                                 " outside 0..3",
                             line_no, inst.column);
        }
        const auto &pt = fields[*col_pt];
        r.pt = parse_number<double>(pt, line_no, "lep_pt");
        if (!std::isfinite(r.pt) || r.pt <= 0.0) {
            throw ParseError("lep_pt must be finite and > 0", line_no,
                             pt.column);
        }
        if (options.pt_in_mev) {
            r.pt /= 1000.0;
        }
        records.push_back(r);
    }
    return records;
}

std::vector<LeptonRecord> load_dataset(const std::filesystem::path &path,
                                       const DatasetOptions &options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open dataset " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str(), options);
}

std::string format_dataset(const std::vector<LeptonRecord> &records) {
    std::ostringstream out;
    out.precision(17);
    out << "event_id,instance,lep_pt\n";
    for (const auto &r : records) {
        out << r.event_id << ',' << r.instance << ',' << r.pt << '\n';
    }
    return out.str();
}

} // namespace hepgrover
