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
#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

namespace {

constexpr std::size_t kSampleCount = 300;
constexpr double kBoundLo = 1e-3;
constexpr double kBoundHi = 10.0;
constexpr std::size_t kGridSize = 64;
constexpr double kRelativeStepStop = 1e-6;
constexpr std::size_t kMaxSweeps = 200000;

double sum_squares(const std::vector<double>& xs, const std::vector<double>& ys, double a, double b) {
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = membership_curve(xs[i], {a, b}) - ys[i];
        s += r * r;
    }
    return s;
}

}  // namespace

double membership_curve(double d, CurveParams ab) { return 1.0 / (1.0 + ab.a * std::pow(d, 2.0 * ab.b)); }

double target_curve(double d, double min_dist, double spread) {
    return d <= min_dist ? 1.0 : std::exp(-(d - min_dist) / spread);
}

std::vector<double> curve_samples(double spread) {
    std::vector<double> xs(kSampleCount);
    for (std::size_t i = 0; i < kSampleCount; ++i) {
        xs[i] = 3.0 * spread * static_cast<double>(i + 1) / static_cast<double>(kSampleCount);
    }
    return xs;
}

CurveParams fit_ab(double min_dist, double spread) {
    if (!(min_dist >= 0.0)) throw ProjectionError("min_dist must be >= 0");
    if (!(spread > 0.0)) throw ProjectionError("spread must be > 0");

    const std::vector<double> xs = curve_samples(spread);
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = target_curve(xs[i], min_dist, spread);

    // Coarse log-spaced grid.
    const double log_lo = std::log(kBoundLo);
    const double log_step = (std::log(kBoundHi) - log_lo) / static_cast<double>(kGridSize - 1);
    CurveParams best{kBoundLo, kBoundLo};
    double best_err = sum_squares(xs, ys, best.a, best.b);
    for (std::size_t ia = 0; ia < kGridSize; ++ia) {
        const double a = std::exp(log_lo + log_step * static_cast<double>(ia));
        for (std::size_t ib = 0; ib < kGridSize; ++ib) {
            const double b = std::exp(log_lo + log_step * static_cast<double>(ib));
            const double err = sum_squares(xs, ys, a, b);
            if (err < best_err) {
                best_err = err;
                best = {a, b};
            }
        }
    }

    // Coordinate descent with per-coordinate relative steps: grow on
    // success, halve on failure.
    double params[2] = {best.a, best.b};
    double rel_step[2] = {0.1, 0.1};
    for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (rel_step[0] < kRelativeStepStop && rel_step[1] < kRelativeStepStop) break;
        for (int c = 0; c < 2; ++c) {
            bool moved = false;
            for (double sign : {1.0, -1.0}) {
                double trial[2] = {params[0], params[1]};
                trial[c] = std::clamp(params[c] * (1.0 + sign * rel_step[c]), kBoundLo, kBoundHi);
                const double err = sum_squares(xs, ys, trial[0], trial[1]);
                if (err < best_err) {
                    best_err = err;
                    params[c] = trial[c];
                    moved = true;
                    break;
                }
            }
            rel_step[c] = moved ? std::min(0.5, rel_step[c] * 2.0) : rel_step[c] * 0.5;
        }
    }
    return {params[0], params[1]};
}

}  // namespace lingua_atlas
