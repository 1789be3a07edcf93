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
#include <map>
#include <numeric>

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

FuzzyGraph::FuzzyGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.i == e.j || e.i >= n || e.j >= n) throw ProjectionError("invalid fuzzy graph edge");
        if (!(e.weight > 0.0 && e.weight <= 1.0)) throw ProjectionError("fuzzy membership outside (0, 1]");
        if (e.i > e.j) std::swap(e.i, e.j);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
    for (std::size_t k = 1; k < edges_.size(); ++k) {
        if (edges_[k - 1].i == edges_[k].i && edges_[k - 1].j == edges_[k].j) {
            throw ProjectionError("duplicate fuzzy graph edge");
        }
    }
}

double FuzzyGraph::weight(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{i, j}, [](const Edge& e, const auto& key) {
        return std::tie(e.i, e.j) < std::tie(key.first, key.second);
    });
    if (it != edges_.end() && it->i == i && it->j == j) return it->weight;
    return 0.0;
}

double FuzzyGraph::max_weight() const noexcept {
    double m = 0.0;
    for (const auto& e : edges_) m = std::max(m, e.weight);
    return m;
}

FuzzyGraph::Adjacency FuzzyGraph::adjacency() const {
    Adjacency adj;
    adj.offsets.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++adj.offsets[e.i + 1];
        ++adj.offsets[e.j + 1];
    }
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.targets.resize(2 * edges_.size());
    adj.weights.resize(2 * edges_.size());
    std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
    for (const auto& e : edges_) {
        adj.targets[fill[e.i]] = e.j;
        adj.weights[fill[e.i]++] = e.weight;
        adj.targets[fill[e.j]] = e.i;
        adj.weights[fill[e.j]++] = e.weight;
    }
    return adj;
}

std::size_t FuzzyGraph::component_count() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = n_;
    for (const auto& e : edges_) {
        const auto a = find(e.i);
        const auto b = find(e.j);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            --components;
        }
    }
    return components;
}

double directed_membership(double distance, double rho, double sigma) {
    return std::exp(-std::max(0.0, distance - rho) / sigma);
}

FuzzyGraph fuzzy_simplicial_set(const KnnGraph& knn, const SmoothKnn& smooth) {
    const std::size_t n = knn.size();
    if (smooth.rho.size() != n || smooth.sigma.size() != n) {
        throw ProjectionError("smooth kNN calibration does not match the kNN graph");
    }
    // (low, high) -> (w(low -> high), w(high -> low))
    std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> directed;
    for (std::size_t i = 0; i < n; ++i) {
        const auto nbrs = knn.neighbors(i);
        const auto dists = knn.dists(i);
        for (std::size_t r = 0; r < knn.k; ++r) {
            const std::size_t j = nbrs[r];
            const double w = directed_membership(dists[r], smooth.rho[i], smooth.sigma[i]);
            auto& slot = directed[{std::min(i, j), std::max(i, j)}];
            (i < j ? slot.first : slot.second) = w;
        }
    }
    std::vector<Edge> edges;
    edges.reserve(directed.size());
    for (const auto& [key, w] : directed) {
        // a + b - ab, evaluated as hi + lo (1 - hi) so a full membership
        // stays exactly 1.
        const double hi = std::max(w.first, w.second);
        const double lo = std::min(w.first, w.second);
        const double mu = hi + lo * (1.0 - hi);
        if (mu > 0.0) edges.push_back(Edge{key.first, key.second, std::min(1.0, mu)});
    }
    return FuzzyGraph(n, std::move(edges));
}

}  // namespace lingua_atlas
