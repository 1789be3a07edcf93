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
#include <cassert>
#include <cmath>

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/random.hpp"
#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

namespace {

double clip(double g) { return std::clamp(g, -kGradientClip, kGradientClip); }

double squared_distance(const Matrix& y, std::size_t i, std::size_t j) {
    const double dx = y(i, 0) - y(j, 0);
    const double dy = y(i, 1) - y(j, 1);
    return dx * dx + dy * dy;
}

}  // namespace

Matrix optimize_layout(Matrix coords, const FuzzyGraph& graph, const UmapParams& params, CurveParams ab,
                       const OptimizeOptions& options) {
    const std::size_t n = coords.rows();
    if (coords.cols() != 2) throw ProjectionError("layout must have two columns");
    if (graph.size() != n) throw ProjectionError("layout and graph sizes differ");
    if (params.n_epochs == 0 || graph.edges().empty()) return coords;

    const auto adj = graph.adjacency();
    const double max_mu = graph.max_weight();
    std::vector<double> epochs_per_sample(adj.weights.size());
    for (std::size_t e = 0; e < adj.weights.size(); ++e) epochs_per_sample[e] = max_mu / adj.weights[e];
    std::vector<double> next_sample(epochs_per_sample);

    const double a = ab.a;
    const double b = ab.b;
    const double n_epochs = static_cast<double>(params.n_epochs);
    Rng rng(params.seed);

    for (std::size_t epoch = 1; epoch <= params.n_epochs; ++epoch) {
        const double alpha = params.learning_rate * (1.0 - static_cast<double>(epoch - 1) / n_epochs);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) {
                if (next_sample[e] > static_cast<double>(epoch)) continue;
                const std::size_t j = adj.targets[e];

                if (options.attract) {
                    const double d2 = squared_distance(coords, i, j);
                    if (d2 > 0.0) {
                        const double coef = (-2.0 * a * b * std::pow(d2, b - 1.0)) / (1.0 + a * std::pow(d2, b));
                        for (std::size_t c = 0; c < 2; ++c) {
                            const double g = clip(coef * (coords(i, c) - coords(j, c)));
                            coords(i, c) += alpha * g;
                            coords(j, c) -= alpha * g;
                        }
                    }
                }

                if (options.repel) {
                    for (std::size_t s = 0; s < params.negative_sample_rate; ++s) {
                        const std::size_t other = static_cast<std::size_t>(rng.below(n));
                        if (other == i) continue;
                        const double d2 = squared_distance(coords, i, other);
                        for (std::size_t c = 0; c < 2; ++c) {
                            double g = kGradientClip;
                            if (d2 > 0.0) {
                                const double coef =
                                    (2.0 * b) / ((kRepulsionEpsilon + d2) * (1.0 + a * std::pow(d2, b)));
                                g = clip(coef * (coords(i, c) - coords(other, c)));
                            }
                            coords(i, c) += alpha * g;
                        }
                    }
                }
                next_sample[e] += epochs_per_sample[e];
            }
        }
        assert(coords.all_finite());
    }
    if (!coords.all_finite()) throw ProjectionError("layout optimisation produced non-finite coordinates");
    return coords;
}

}  // namespace lingua_atlas
