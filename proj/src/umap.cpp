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

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

void UmapParams::validate() const {
    if (n_neighbors < 2) throw ProjectionError("n_neighbors must be >= 2");
    if (!(min_dist >= 0.0)) throw ProjectionError("min_dist must be >= 0");
    if (!(spread > 0.0)) throw ProjectionError("spread must be > 0");
    if (!(learning_rate > 0.0)) throw ProjectionError("learning_rate must be > 0");
    if (a.has_value() != b.has_value()) throw ProjectionError("curve coefficients a and b must be given together");
    if (a && !(*a > 0.0 && *b > 0.0)) throw ProjectionError("curve coefficients must be positive");
}

UmapResult umap_run(const SentenceMatrix& matrix, const UmapParams& params) {
    params.validate();
    const std::size_t n = matrix.size();
    if (matrix.labels.size() != n) throw ProjectionError("label count does not match row count");
    if (params.n_neighbors >= n) {
        throw ProjectionError("n_neighbors (" + std::to_string(params.n_neighbors) +
                              ") must be smaller than the number of sentences (" + std::to_string(n) + ")");
    }
    if (!matrix.rows.all_finite()) throw ProjectionError("input matrix contains non-finite values");

    const KnnGraph knn = knn_exact(matrix.rows, params.n_neighbors, params.metric);
    const SmoothKnn smooth = smooth_knn(knn);
    const FuzzyGraph graph = fuzzy_simplicial_set(knn, smooth);
    const CurveParams ab = params.a ? CurveParams{*params.a, *params.b} : fit_ab(params.min_dist, params.spread);
    LayoutInit init = initialize_layout(graph, params);

    UmapResult result;
    result.ab = ab;
    result.spectral_fallback = init.spectral_fallback;
    result.fallback_reason = std::move(init.fallback_reason);
    result.projection.coords = optimize_layout(std::move(init.coords), graph, params, ab);
    result.projection.labels = matrix.labels;
    return result;
}

Projection umap_project(const SentenceMatrix& matrix, const UmapParams& params) {
    return umap_run(matrix, params).projection;
}

}  // namespace lingua_atlas
