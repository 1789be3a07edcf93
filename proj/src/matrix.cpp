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

#include "lingua_atlas/matrix.hpp"
#include "lingua_atlas/error.hpp"

#include <cmath>

namespace lingua_atlas {

bool Matrix::all_finite() const noexcept {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * y[i];
    }
    return s;
}

double norm2(std::span<const double> x) noexcept { return std::sqrt(dot(x, x)); }

const char* stage_name(Stage stage) noexcept {
    switch (stage) {
        case Stage::config: return "config";
        case Stage::corpus: return "corpus";
        case Stage::embedding: return "embedding";
        case Stage::projection: return "projection";
        case Stage::io: return "io";
    }
    return "unknown";
}

}  // namespace lingua_atlas
