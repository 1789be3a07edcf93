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

#include <algorithm>
#include <cmath>
#include <utility>

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

namespace {

// Text vectors are mostly zeros. Coordinates where both rows are zero add
// nothing to the sum below, so the compressed form gives the same bits as
// the dense loop.
struct SparseRow {
    std::vector<std::size_t> idx;
    std::vector<double> val;
};

SparseRow compress(std::span<const double> row) {
    SparseRow s;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0.0) {
            s.idx.push_back(c);
            s.val.push_back(row[c]);
        }
    }
    return s;
}

double sparse_sq_euclidean(const SparseRow& x, const SparseRow& y) {
    double s = 0.0;
    std::size_t a = 0, b = 0;
    while (a < x.idx.size() || b < y.idx.size()) {
        double diff;
        if (b == y.idx.size() || (a < x.idx.size() && x.idx[a] < y.idx[b])) {
            diff = x.val[a++];
        } else if (a == x.idx.size() || y.idx[b] < x.idx[a]) {
            diff = -y.val[b++];
        } else {
            diff = x.val[a++] - y.val[b++];
        }
        s += diff * diff;
    }
    return s;
}


}  // namespace

const char* to_string(Metric m) noexcept { return m == Metric::cosine ? "cosine" : "euclidean"; }
const char* to_string(InitMode m) noexcept { return m == InitMode::spectral ? "spectral" : "random"; }

double pairwise_distance(std::span<const double> x, std::span<const double> y, Metric metric) {
    if (metric == Metric::cosine) {
        const double nx = norm2(x);
        const double ny = norm2(y);
        if (nx == 0.0 || ny == 0.0) return 1.0;
        double s = 0.0;
        for (std::size_t c = 0; c < x.size(); ++c) {
            const double diff = x[c] / nx - y[c] / ny;
            s += diff * diff;
        }
        return 0.5 * s;
    }
    double s = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) s += (x[c] - y[c]) * (x[c] - y[c]);
    return std::sqrt(s);
}

KnnGraph knn_exact(const Matrix& points, std::size_t k, Metric metric) {
    const std::size_t n = points.rows();
    if (k == 0) throw ProjectionError("n_neighbors must be positive");
    if (k >= n) {
        throw ProjectionError("n_neighbors (" + std::to_string(k) + ") must be smaller than the number of points (" +
                              std::to_string(n) + ")");
    }
    // Cosine distance is evaluated as |x/|x| - y/|y||^2 / 2, which is
    // exactly zero for identical rows.
    std::vector<SparseRow> rows;
    std::vector<bool> zero(n, false);
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(compress(points.row(i)));
        if (metric == Metric::cosine) {
            const double nrm = norm2(points.row(i));
            zero[i] = nrm == 0.0;
            for (double& v : rows.back().val) v /= nrm;
        }
    }

    KnnGraph g;
    g.k = k;
    g.indices.resize(n * k);
    g.distances.resize(n * k);
    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        cand.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double d;
            if (metric == Metric::cosine) {
                d = zero[i] || zero[j] ? 1.0 : 0.5 * sparse_sq_euclidean(rows[i], rows[j]);
            } else {
                d = std::sqrt(sparse_sq_euclidean(rows[i], rows[j]));
            }
            cand.emplace_back(d, j);
        }
        // Pair ordering compares distance, then index.
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());
        for (std::size_t r = 0; r < k; ++r) {
            g.distances[i * k + r] = cand[r].first;
            g.indices[i * k + r] = cand[r].second;
        }
    }
    return g;
}

}  // namespace lingua_atlas
