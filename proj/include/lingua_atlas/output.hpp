// Copyright 2026 The Lingua Atlas Authors. All Rights Reserved.
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

#ifndef LINGUA_ATLAS_OUTPUT_HPP
#define LINGUA_ATLAS_OUTPUT_HPP

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "lingua_atlas/metrics.hpp"
#include "lingua_atlas/umap.hpp"

#include "json.hpp"

namespace lingua_atlas {

inline constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#b5cf6b",
};

inline constexpr double kSvgSize = 800.0;
inline constexpr double kSvgMargin = 0.05;

std::string csv_field(std::string_view value);

/// Header `language,sentence_id,x,y`; floats printed with 9 significant
/// digits. sentence_id counts sentences within each language from 0.
std::string format_csv(const Projection& proj);
void emit_csv(const Projection& proj, const std::filesystem::path& path);

struct SvgSummary {
    std::size_t label_count = 0;
    bool palette_cycled = false;  // more labels than palette colours
};

/// 800 x 800 scatter plot, one colour per label in lexicographic order,
/// with a legend. Byte-identical for identical projections.
std::string format_svg(const Projection& proj, SvgSummary* summary = nullptr);
SvgSummary emit_svg(const Projection& proj, const std::filesystem::path& path);

nlohmann::json report_to_json(const ClusterReport& report);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_OUTPUT_HPP
