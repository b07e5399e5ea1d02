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
#include "hepgrover/io.hpp"
#include "hepgrover/report.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hepgrover {
namespace {

std::vector<SearchReport> sample_reports() {
    std::vector<LeptonRecord> recs;
    const int inst[] = {0, 1, 2, 1, 0, 0, 0, 3, 3, 1, 2, 3, 0, 0, 0, 0};
    for (std::size_t i = 0; i < 16; ++i) {
        recs.push_back({std::int64_t(i), std::int64_t(i / 2), inst[i], 5.0 + double(i)});
    }
    SearchOptions opt;
    opt.seed = 4;
    return search_database(recs, opt);
}

TEST(Report, JsonLinesAreByteStable) {
    const auto a = format_report_jsonl(sample_reports());
    const auto b = format_report_jsonl(sample_reports());
    EXPECT_EQ(a, b);
    std::istringstream in(a);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_TRUE(j.contains("group_id"));
        EXPECT_TRUE(j.contains("selections"));
        EXPECT_EQ(j["shots"], 8192);
        ++lines;
    }
    EXPECT_EQ(lines, 3u);
}

TEST(Report, JsonSelectionFields) {
    const auto reports = sample_reports();
    std::istringstream in(format_report_jsonl(reports));
    std::string line;
    std::getline(in, line);
    const auto j = nlohmann::json::parse(line);
    ASSERT_EQ(j["selections"].size(), 1u);
    const auto &s = j["selections"][0];
    EXPECT_EQ(s["row"], 7);
    EXPECT_EQ(s["slot"], 7);
    EXPECT_EQ(s["state"], "11111");
    EXPECT_EQ(j["scheme"], 2);
}

TEST(Report, TextHistogramMarksHighlights) {
    const Histogram h{{0, 10}, {3, 30}};
    const auto text = render_histogram_text(h, 2, {3}, 10);
    EXPECT_NE(text.find("|11>"), std::string::npos);
    EXPECT_NE(text.find("30"), std::string::npos);
    EXPECT_NE(text.find("0.7500"), std::string::npos);
}

TEST(Report, SvgIsWellFormedish) {
    const Histogram h{{0, 10}, {5, 30}};
    const auto svg = render_histogram_svg(h, 3, "t & <x>");
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(svg.find("<x>"), std::string::npos);
    EXPECT_THROW((void)render_histogram_svg(h, 11, "x"), ValidationError);
}

TEST(Report, AtomicWriteReplacesFile) {
    const auto dir = std::filesystem::temp_directory_path() / "hepgrover_report_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.txt";
    write_file_atomic(path, "first");
    write_file_atomic(path, "second");
    std::ifstream in(path);
    std::string content;
    std::getline(in, content);
    EXPECT_EQ(content, "second");
    EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
    EXPECT_THROW(write_file_atomic(dir / "no" / "such" / "file", "x"), ConfigError);
    std::filesystem::remove_all(dir);
}

} // namespace
} // namespace hepgrover
