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

#ifndef LINGUA_ATLAS_METRICS_HPP
#define LINGUA_ATLAS_METRICS_HPP

#include <map>
#include <string>
#include <vector>

#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

/// Fraction of each point's k nearest 2-D neighbours (self excluded, ties
/// to the smaller index) that share its label, averaged per label.
/// Throws ProjectionError naming any label with k or fewer points.
std::map<std::string, double> knn_label_purity(const Projection& proj, std::size_t k);

/// Mean silhouette over all points with euclidean distance. Points in
/// singleton clusters score 0.
double silhouette(const Projection& proj);

struct CentroidDistances {
    std::vector<std::string> labels;  // lexicographic
    Matrix distances;                 // labels.size() squared, symmetric
};

CentroidDistances centroid_distances(const Projection& proj);

struct OverlappingPair {
    std::string first;
    std::string second;
    double pair_purity = 0.0;
};

struct ClusterReport {
    std::map<std::string, double> purity;
    double silhouette = 0.0;
    CentroidDistances centroid_dist;
    std::vector<OverlappingPair> overlapping_pairs;
    // Every label pair, including the non-overlapping ones.
    std::vector<OverlappingPair> pair_purities;
};

/// Purity over the points carrying either label, averaged over those points.
double pair_purity(const Projection& proj, const std::string& first, const std::string& second, std::size_t k);

inline constexpr double kDefaultOverlapThreshold = 0.7;
inline constexpr std::size_t kDefaultPurityK = 10;

ClusterReport overlap_report(const Projection& proj, std::size_t k = kDefaultPurityK,
                             double threshold = kDefaultOverlapThreshold);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_METRICS_HPP
