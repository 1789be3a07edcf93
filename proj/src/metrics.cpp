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

#include "lingua_atlas/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "lingua_atlas/error.hpp"

namespace lingua_atlas {

namespace {

double distance2d(const Matrix& c, std::size_t i, std::size_t j) {
    return std::hypot(c(i, 0) - c(j, 0), c(i, 1) - c(j, 1));
}

void check_projection(const Projection& proj) {
    if (proj.coords.cols() != 2 || proj.labels.size() != proj.coords.rows()) {
        throw ProjectionError("projection must be n x 2 with one label per row");
    }
}

// Per-point same-label fraction over the subset `points` (indices into proj).
std::vector<double> same_label_fractions(const Projection& proj, const std::vector<std::size_t>& points, std::size_t k) {
    std::vector<double> out(points.size());
    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(points.size());
    for (std::size_t a = 0; a < points.size(); ++a) {
        cand.clear();
        for (std::size_t b = 0; b < points.size(); ++b) {
            if (b != a) cand.emplace_back(distance2d(proj.coords, points[a], points[b]), points[b]);
        }
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());
        std::size_t same = 0;
        for (std::size_t r = 0; r < k; ++r) {
            if (proj.labels[cand[r].second] == proj.labels[points[a]]) ++same;
        }
        out[a] = static_cast<double>(same) / static_cast<double>(k);
    }
    return out;
}

void check_label_sizes(const Projection& proj, const std::vector<std::size_t>& points, std::size_t k) {
    if (k == 0) throw ProjectionError("purity k must be positive");
    std::map<std::string, std::size_t> sizes;
    for (std::size_t p : points) ++sizes[proj.labels[p]];
    for (const auto& [label, count] : sizes) {
        if (count <= k) {
            throw ProjectionError("label '" + label + "' has " + std::to_string(count) +
                                  " points; purity needs more than k = " + std::to_string(k));
        }
    }
}

}  // namespace

std::map<std::string, double> knn_label_purity(const Projection& proj, std::size_t k) {
    check_projection(proj);
    std::vector<std::size_t> all(proj.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    check_label_sizes(proj, all, k);

    const auto fractions = same_label_fractions(proj, all, k);
    std::map<std::string, std::pair<double, std::size_t>> acc;
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto& slot = acc[proj.labels[i]];
        slot.first += fractions[i];
        ++slot.second;
    }
    std::map<std::string, double> out;
    for (const auto& [label, s] : acc) out[label] = s.first / static_cast<double>(s.second);
    return out;
}

double pair_purity(const Projection& proj, const std::string& first, const std::string& second, std::size_t k) {
    check_projection(proj);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < proj.size(); ++i) {
        if (proj.labels[i] == first || proj.labels[i] == second) subset.push_back(i);
    }
    check_label_sizes(proj, subset, k);
    if (subset.empty()) throw ProjectionError("no points carry labels '" + first + "' or '" + second + "'");
    const auto fractions = same_label_fractions(proj, subset, k);
    double total = 0.0;
    for (double f : fractions) total += f;
    return total / static_cast<double>(fractions.size());
}

double silhouette(const Projection& proj) {
    check_projection(proj);
    std::vector<std::string> labels(proj.labels);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() < 2) throw ProjectionError("silhouette needs at least 2 labels");

    std::vector<std::size_t> cluster(proj.size());
    std::vector<std::size_t> cluster_size(labels.size(), 0);
    for (std::size_t i = 0; i < proj.size(); ++i) {
        cluster[i] = static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), proj.labels[i]) -
                                              labels.begin());
        ++cluster_size[cluster[i]];
    }

    double total = 0.0;
    std::vector<double> sums(labels.size());
    for (std::size_t i = 0; i < proj.size(); ++i) {
        if (cluster_size[cluster[i]] == 1) continue;
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < proj.size(); ++j) {
            if (j != i) sums[cluster[j]] += distance2d(proj.coords, i, j);
        }
        const double a = sums[cluster[i]] / static_cast<double>(cluster_size[cluster[i]] - 1);
        double b = INFINITY;
        for (std::size_t c = 0; c < labels.size(); ++c) {
            if (c != cluster[i]) b = std::min(b, sums[c] / static_cast<double>(cluster_size[c]));
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(proj.size());
}

CentroidDistances centroid_distances(const Projection& proj) {
    check_projection(proj);
    std::map<std::string, std::array<double, 3>> sums;  // x, y, count
    for (std::size_t i = 0; i < proj.size(); ++i) {
        auto& s = sums[proj.labels[i]];
        s[0] += proj.coords(i, 0);
        s[1] += proj.coords(i, 1);
        s[2] += 1.0;
    }
    CentroidDistances out;
    std::vector<std::array<double, 2>> means;
    for (const auto& [label, s] : sums) {
        out.labels.push_back(label);
        means.push_back({s[0] / s[2], s[1] / s[2]});
    }
    const std::size_t m = out.labels.size();
    out.distances = Matrix(m, m);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = p + 1; q < m; ++q) {
            const double d = std::hypot(means[p][0] - means[q][0], means[p][1] - means[q][1]);
            out.distances(p, q) = d;
            out.distances(q, p) = d;
        }
    }
    return out;
}

ClusterReport overlap_report(const Projection& proj, std::size_t k, double threshold) {
    ClusterReport report;
    report.purity = knn_label_purity(proj, k);
    report.silhouette = silhouette(proj);
    report.centroid_dist = centroid_distances(proj);
    const auto& labels = report.centroid_dist.labels;
    for (std::size_t p = 0; p < labels.size(); ++p) {
        for (std::size_t q = p + 1; q < labels.size(); ++q) {
            const double pp = pair_purity(proj, labels[p], labels[q], k);
            report.pair_purities.push_back({labels[p], labels[q], pp});
            if (pp < threshold) report.overlapping_pairs.push_back({labels[p], labels[q], pp});
        }
    }
    return report;
}

}  // namespace lingua_atlas
