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

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/random.hpp"
#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

namespace {

constexpr double kLayoutExtent = 10.0;

void orthogonalise(std::vector<double>& v, const std::vector<std::vector<double>>& basis) {
    for (const auto& u : basis) {
        const double p = dot(v, u);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * u[i];
    }
}

bool normalise(std::vector<double>& v) {
    const double nrm = norm2(v);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) return false;
    for (double& x : v) x /= nrm;
    return true;
}

}  // namespace

Matrix random_layout(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix coords(n, 2);
    for (double& v : coords.data()) v = rng.uniform(-kLayoutExtent, kLayoutExtent);
    return coords;
}

std::optional<Matrix> spectral_embedding(const FuzzyGraph& graph, std::uint64_t seed, const SpectralOptions& options) {
    const std::size_t n = graph.size();
    if (n < 3) return std::nullopt;
    const auto adj = graph.adjacency();

    std::vector<double> inv_sqrt_deg(n);
    std::vector<double> top(n);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) deg += adj.weights[e];
        if (!(deg > 0.0)) return std::nullopt;
        inv_sqrt_deg[i] = 1.0 / std::sqrt(deg);
        top[i] = std::sqrt(deg);
    }
    normalise(top);

    // Largest eigenvectors of I + D^-1/2 W D^-1/2 are the smallest of the
    // normalised Laplacian; the first is known in closed form.
    auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) {
                const std::size_t j = adj.targets[e];
                s += adj.weights[e] * inv_sqrt_deg[j] * v[j];
            }
            out[i] = v[i] + inv_sqrt_deg[i] * s;
        }
    };

    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::vector<double>> basis{top};
    std::vector<double> next(n);
    for (int k = 0; k < 2; ++k) {
        std::vector<double> v(n);
        for (double& x : v) x = rng.uniform(-1.0, 1.0);
        orthogonalise(v, basis);
        if (!normalise(v)) return std::nullopt;
        bool converged = false;
        for (std::size_t it = 0; it < options.max_iterations; ++it) {
            apply(v, next);
            orthogonalise(next, basis);
            if (!normalise(next)) return std::nullopt;
            double delta = 0.0;
            for (std::size_t i = 0; i < n; ++i) delta += (next[i] - v[i]) * (next[i] - v[i]);
            v.swap(next);
            if (std::sqrt(delta) < options.tolerance) {
                converged = true;
                break;
            }
        }
        if (!converged) return std::nullopt;
        basis.push_back(std::move(v));
    }

    Matrix coords(n, 2);
    double max_abs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        coords(i, 0) = basis[1][i];
        coords(i, 1) = basis[2][i];
        max_abs = std::max({max_abs, std::abs(basis[1][i]), std::abs(basis[2][i])});
    }
    if (!(max_abs > 0.0)) return std::nullopt;
    for (double& x : coords.data()) x *= kLayoutExtent / max_abs;
    return coords;
}

LayoutInit initialize_layout(const FuzzyGraph& graph, const UmapParams& params) {
    if (graph.size() == 0) throw ProjectionError("cannot initialise an empty graph");
    LayoutInit out;
    if (params.init == InitMode::spectral) {
        if (graph.component_count() > 1) {
            out.spectral_fallback = true;
            out.fallback_reason = "graph has " + std::to_string(graph.component_count()) + " connected components";
        } else if (auto coords = spectral_embedding(graph, params.seed)) {
            out.coords = std::move(*coords);
            return out;
        } else {
            out.spectral_fallback = true;
            out.fallback_reason = "spectral power iteration did not converge";
        }
    }
    out.coords = random_layout(graph.size(), params.seed);
    return out;
}

}  // namespace lingua_atlas
