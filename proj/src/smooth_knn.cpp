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

#include <cmath>

#include "lingua_atlas/umap.hpp"

namespace lingua_atlas {

double membership_sum(std::span<const double> distances, double rho, double sigma) {
    double s = 0.0;
    for (double d : distances) s += std::exp(-std::max(0.0, d - rho) / sigma);
    return s;
}

SmoothKnnEntry smooth_knn(std::span<const double> distances, std::size_t k) {
    SmoothKnnEntry out;
    for (double d : distances) {
        if (d > 0.0) {
            out.rho = d;
            break;
        }
    }
    const double target = std::log2(static_cast<double>(k));

    // The sum grows monotonically with sigma.
    if (membership_sum(distances, out.rho, kSigmaMin) >= target) {
        out.sigma = kSigmaMin;
        return out;
    }
    if (membership_sum(distances, out.rho, kSigmaMax) <= target) {
        out.sigma = kSigmaMax;
        return out;
    }
    double lo = kSigmaMin;
    double hi = kSigmaMax;
    for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (membership_sum(distances, out.rho, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.sigma = 0.5 * (lo + hi);
    return out;
}

SmoothKnn smooth_knn(const KnnGraph& knn) {
    const std::size_t n = knn.size();
    SmoothKnn out;
    out.rho.resize(n);
    out.sigma.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = smooth_knn(knn.dists(i), knn.k);
        out.rho[i] = e.rho;
        out.sigma[i] = e.sigma;
    }
    return out;
}

}  // namespace lingua_atlas
