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

#include "lingua_atlas/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "lingua_atlas/error.hpp"

namespace lingua_atlas {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<std::string> sorted_labels(const Projection& proj) {
    std::vector<std::string> labels(proj.labels);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

}  // namespace

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_csv(const Projection& proj) {
    std::string out = "language,sentence_id,x,y\n";
    std::map<std::string, std::size_t> next_id;
    for (std::size_t i = 0; i < proj.size(); ++i) {
        const auto& label = proj.labels[i];
        out += csv_field(label);
        out += ',';
        out += std::to_string(next_id[label]++);
        out += ',';
        out += fmt("%#.9g", proj.coords(i, 0));
        out += ',';
        out += fmt("%#.9g", proj.coords(i, 1));
        out += '\n';
    }
    return out;
}

void emit_csv(const Projection& proj, const std::filesystem::path& path) { write_text_file(path, format_csv(proj)); }

std::string format_svg(const Projection& proj, SvgSummary* summary) {
    if (proj.size() == 0) throw ProjectionError("cannot plot an empty projection");
    const auto labels = sorted_labels(proj);

    double min_x = proj.coords(0, 0), max_x = min_x;
    double min_y = proj.coords(0, 1), max_y = min_y;
    for (std::size_t i = 1; i < proj.size(); ++i) {
        min_x = std::min(min_x, proj.coords(i, 0));
        max_x = std::max(max_x, proj.coords(i, 0));
        min_y = std::min(min_y, proj.coords(i, 1));
        max_y = std::max(max_y, proj.coords(i, 1));
    }
    // One scale for both axes keeps the aspect ratio; a zero range puts
    // everything in the centre.
    const double centre = kSvgSize / 2.0;
    const double usable = kSvgSize * (1.0 - 2.0 * kSvgMargin);
    const double range = std::max(max_x - min_x, max_y - min_y);
    const double scale = range > 0.0 ? usable / range : 0.0;
    const double mid_x = 0.5 * (min_x + max_x);
    const double mid_y = 0.5 * (min_y + max_y);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
    for (std::size_t l = 0; l < labels.size(); ++l) {
        out += "<g class=\"points\" data-label=\"" + xml_escape(labels[l]) + "\" fill=\"" +
               kPalette[l % kPalette.size()] + "\" fill-opacity=\"0.75\">\n";
        for (std::size_t i = 0; i < proj.size(); ++i) {
            if (proj.labels[i] != labels[l]) continue;
            const double px = centre + (proj.coords(i, 0) - mid_x) * scale;
            const double py = centre - (proj.coords(i, 1) - mid_y) * scale;
            out += "<circle cx=\"" + fmt("%.2f", px) + "\" cy=\"" + fmt("%.2f", py) + "\" r=\"3\"/>\n";
        }
        out += "</g>\n";
    }
    out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n";
    for (std::size_t l = 0; l < labels.size(); ++l) {
        const double y = 24.0 + 18.0 * static_cast<double>(l);
        out += "<circle cx=\"20\" cy=\"" + fmt("%.2f", y) + "\" r=\"5\" fill=\"" + kPalette[l % kPalette.size()] +
               "\"/>\n";
        out += "<text x=\"32\" y=\"" + fmt("%.2f", y + 4.5) + "\">" + xml_escape(labels[l]) + "</text>\n";
    }
    out += "</g>\n</svg>\n";

    if (summary != nullptr) {
        summary->label_count = labels.size();
        summary->palette_cycled = labels.size() > kPalette.size();
    }
    return out;
}

SvgSummary emit_svg(const Projection& proj, const std::filesystem::path& path) {
    SvgSummary summary;
    write_text_file(path, format_svg(proj, &summary));
    return summary;
}

nlohmann::json report_to_json(const ClusterReport& report) {
    nlohmann::json j;
    j["purity"] = nlohmann::json::object();
    for (const auto& [label, p] : report.purity) j["purity"][label] = p;
    j["silhouette"] = report.silhouette;
    j["centroid_distances"] = nlohmann::json::object();
    const auto& cd = report.centroid_dist;
    for (std::size_t p = 0; p < cd.labels.size(); ++p) {
        auto row = nlohmann::json::object();
        for (std::size_t q = 0; q < cd.labels.size(); ++q) row[cd.labels[q]] = cd.distances(p, q);
        j["centroid_distances"][cd.labels[p]] = row;
    }
    j["overlapping_pairs"] = nlohmann::json::array();
    for (const auto& op : report.overlapping_pairs) {
        j["overlapping_pairs"].push_back(nlohmann::json::array({op.first, op.second, op.pair_purity}));
    }
    j["pair_purities"] = nlohmann::json::array();
    for (const auto& op : report.pair_purities) {
        j["pair_purities"].push_back(nlohmann::json::array({op.first, op.second, op.pair_purity}));
    }
    return j;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace lingua_atlas
