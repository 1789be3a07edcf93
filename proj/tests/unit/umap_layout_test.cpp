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

#include "doctest.h"
#include "lingua_atlas/error.hpp"
#include "lingua_atlas/metrics.hpp"
#include "lingua_atlas/umap.hpp"
#include "support/curve_oracle.hpp"
#include "support/synthetic.hpp"

using namespace lingua_atlas;

namespace {

double pair_distance(const Matrix& y) { return std::hypot(y(0, 0) - y(1, 0), y(0, 1) - y(1, 1)); }

Matrix two_points(double gap) {
    Matrix y(2, 2);
    y(1, 0) = gap;
    return y;
}

// Ring of n points where each links to its two neighbours.
FuzzyGraph ring(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n, 1.0});
    return FuzzyGraph(n, edges);
}

}  // namespace

TEST_CASE("fit_ab matches the independent least-squares oracle") {
    const auto ab = fit_ab(0.1, 1.0);
    const auto oracle = testing::levenberg_marquardt_ab(0.1, 1.0);
    CHECK(oracle.a == doctest::Approx(1.577).epsilon(1e-3));
    CHECK(oracle.b == doctest::Approx(0.895).epsilon(1e-3));
    CHECK(std::abs(ab.a - oracle.a) / oracle.a < 0.01);
    CHECK(std::abs(ab.b - oracle.b) / oracle.b < 0.01);

    double worst = 0.0;
    for (double d : curve_samples(1.0)) {
        worst = std::max(worst, std::abs(membership_curve(d, ab) - target_curve(d, 0.1, 1.0)));
    }
    CHECK(worst <= 0.1);
}

TEST_CASE("fit_ab orders by min_dist and reaches one at zero") {
    const auto tight = fit_ab(0.1, 1.0);
    const auto loose = fit_ab(0.5, 1.0);
    CHECK(loose.a < tight.a);
    const auto oracle = testing::levenberg_marquardt_ab(0.5, 1.0);
    CHECK(std::abs(loose.a - oracle.a) / oracle.a < 0.01);
    CHECK(std::abs(loose.b - oracle.b) / oracle.b < 0.01);
    for (const auto& ab : {tight, loose, fit_ab(0.0, 2.0)}) CHECK(membership_curve(0.0, ab) == 1.0);
    CHECK_THROWS_AS(fit_ab(-0.1, 1.0), ProjectionError);
    CHECK_THROWS_AS(fit_ab(0.1, 0.0), ProjectionError);
}

TEST_CASE("initialize_layout random mode is seeded") {
    UmapParams p;
    p.init = InitMode::random;
    const auto g = ring(20);
    const auto a = initialize_layout(g, p);
    const auto b = initialize_layout(g, p);
    CHECK(a.coords.rows() == 20);
    CHECK(a.coords.cols() == 2);
    CHECK(a.coords == b.coords);
    CHECK_FALSE(a.spectral_fallback);
    for (double v : a.coords.data()) CHECK(std::abs(v) <= 10.0);
    p.seed = 7;
    CHECK_FALSE(initialize_layout(g, p).coords == a.coords);
}

TEST_CASE("initialize_layout spectral on a connected graph") {
    UmapParams p;
    const auto init = initialize_layout(ring(24), p);
    CHECK_FALSE(init.spectral_fallback);
    REQUIRE(init.coords.rows() == 24);
    double max_abs = 0.0;
    for (double v : init.coords.data()) max_abs = std::max(max_abs, std::abs(v));
    CHECK(max_abs == doctest::Approx(10.0));
    // A ring's second and third Laplacian eigenvectors trace a circle.
    const double r0 = std::hypot(init.coords(0, 0), init.coords(0, 1));
    for (std::size_t i = 1; i < 24; ++i) {
        CHECK(std::hypot(init.coords(i, 0), init.coords(i, 1)) == doctest::Approx(r0).epsilon(1e-4));
    }
}

TEST_CASE("initialize_layout falls back on disconnected graphs") {
    std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 0.5}, {3, 4, 1.0}, {4, 5, 0.8}};
    const FuzzyGraph g(6, edges);
    CHECK(g.component_count() == 2);
    UmapParams p;
    const auto init = initialize_layout(g, p);
    CHECK(init.spectral_fallback);
    CHECK(init.coords.rows() == 6);
    CHECK(init.coords == random_layout(6, p.seed));
}

TEST_CASE("optimize_layout with zero epochs is a no-op") {
    UmapParams p;
    p.n_epochs = 0;
    const Matrix y = two_points(3.0);
    CHECK(optimize_layout(y, FuzzyGraph(2, {Edge{0, 1, 1.0}}), p, {1.577, 0.895}) == y);
}

TEST_CASE("optimize_layout attraction pulls an edge together") {
    UmapParams p;
    p.n_epochs = 100;
    const Matrix y = two_points(5.0);
    const auto out = optimize_layout(y, FuzzyGraph(2, {Edge{0, 1, 1.0}}), p, {1.577, 0.895}, {true, false});
    CHECK(pair_distance(out) < pair_distance(y));
}

TEST_CASE("optimize_layout negative samples push apart") {
    UmapParams p;
    p.n_epochs = 100;
    const Matrix y = two_points(0.5);
    const auto out = optimize_layout(y, FuzzyGraph(2, {Edge{0, 1, 1.0}}), p, {1.577, 0.895}, {false, true});
    CHECK(pair_distance(out) > pair_distance(y));
}

TEST_CASE("optimize_layout handles coincident points without NaN") {
    UmapParams p;
    p.n_epochs = 50;
    Matrix y(5, 2);  // all at the origin
    std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 0.3}, {2, 3, 1.0}, {3, 4, 0.01}};
    const auto out = optimize_layout(y, FuzzyGraph(5, edges), p, {1.577, 0.895});
    CHECK(out.all_finite());
}

TEST_CASE("umap_project contract and determinism") {
    const auto blobs = testing::gaussian_blobs(20, 10, 0.5, 5);
    UmapParams p;
    p.n_epochs = 100;
    const auto a = umap_project(blobs, p);
    const auto b = umap_project(blobs, p);
    CHECK(a.size() == blobs.size());
    CHECK(a.labels == blobs.labels);
    CHECK(a.coords == b.coords);
    CHECK(a.coords.all_finite());

    p.n_neighbors = blobs.size();
    CHECK_THROWS_AS(umap_project(blobs, p), ProjectionError);
    p.n_neighbors = 1;
    CHECK_THROWS_AS(umap_project(blobs, p), ProjectionError);
}

TEST_CASE("umap_project honours supplied curve coefficients") {
    const auto blobs = testing::gaussian_blobs(15, 4, 0.5, 2);
    UmapParams p;
    p.n_epochs = 20;
    p.a = 1.0;
    p.b = 1.0;
    CHECK(umap_run(blobs, p).ab.a == 1.0);
    p.b.reset();
    CHECK_THROWS_AS(umap_run(blobs, p), ProjectionError);
}

TEST_CASE("umap_project recovers well-separated blobs") {
    const auto blobs = testing::gaussian_blobs(60, 50, 0.1, 42);
    UmapParams p;
    p.seed = 42;
    const auto proj = umap_project(blobs, p);
    for (const auto& [label, purity] : knn_label_purity(proj, 10)) {
        CAPTURE(label);
        CHECK(purity >= 0.9);
    }
}
