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

#ifndef LINGUA_ATLAS_UMAP_HPP
#define LINGUA_ATLAS_UMAP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lingua_atlas/embed.hpp"
#include "lingua_atlas/matrix.hpp"

namespace lingua_atlas {

enum class Metric { cosine, euclidean };
enum class InitMode { spectral, random };

const char* to_string(Metric m) noexcept;
const char* to_string(InitMode m) noexcept;

struct UmapParams {
    std::size_t n_neighbors = 15;
    double min_dist = 0.1;
    double spread = 1.0;
    std::size_t n_epochs = 500;
    double learning_rate = 1.0;
    std::size_t negative_sample_rate = 5;
    Metric metric = Metric::cosine;
    InitMode init = InitMode::spectral;
    std::uint64_t seed = 42;
    // Curve coefficients; fitted from min_dist and spread when absent.
    std::optional<double> a;
    std::optional<double> b;

    /// Checks everything except the n-dependent bound on n_neighbors.
    void validate() const;
};

/// Neighbours exclude the point itself and are sorted by ascending
/// distance, ties broken by smaller index.
struct KnnGraph {
    std::size_t k = 0;
    std::vector<std::size_t> indices;  // n * k
    std::vector<double> distances;     // n * k

    std::size_t size() const noexcept { return k == 0 ? 0 : indices.size() / k; }
    std::span<const std::size_t> neighbors(std::size_t i) const { return {indices.data() + i * k, k}; }
    std::span<const double> dists(std::size_t i) const { return {distances.data() + i * k, k}; }
};

/// Exact all-pairs search, O(n^2) distance evaluations. Cosine distance is
/// 1 - cos(x, y), and a zero vector is at distance 1 from everything.
KnnGraph knn_exact(const Matrix& points, std::size_t k, Metric metric);

double pairwise_distance(std::span<const double> x, std::span<const double> y, Metric metric);

inline constexpr double kSigmaMin = 1e-3;
inline constexpr double kSigmaMax = 1e6;

struct SmoothKnnEntry {
    double rho = 0.0;
    double sigma = kSigmaMin;
};

struct SmoothKnn {
    std::vector<double> rho;
    std::vector<double> sigma;
};

/// rho is the smallest strictly positive distance; sigma solves
/// sum_i exp(-max(0, d_i - rho) / sigma) = log2(k) by 64 bisection steps on
/// [kSigmaMin, kSigmaMax], clamping to the bound that cannot be met.
SmoothKnnEntry smooth_knn(std::span<const double> distances, std::size_t k);
SmoothKnn smooth_knn(const KnnGraph& knn);

/// Left-hand side of the calibration constraint.
double membership_sum(std::span<const double> distances, double rho, double sigma);

struct Edge {
    std::size_t i = 0;
    std::size_t j = 0;
    double weight = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Symmetric fuzzy membership graph stored once per unordered pair (i < j),
/// sorted by (i, j). Weights are in (0, 1].
class FuzzyGraph {
public:
    FuzzyGraph() = default;
    FuzzyGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// 0 when no edge is stored.
    double weight(std::size_t i, std::size_t j) const;
    double max_weight() const noexcept;

    /// Both directions of every edge, grouped by source.
    struct Adjacency {
        std::vector<std::size_t> offsets;  // n + 1
        std::vector<std::size_t> targets;
        std::vector<double> weights;
    };
    Adjacency adjacency() const;

    std::size_t component_count() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Directed weight of edge i -> j at distance d.
double directed_membership(double distance, double rho, double sigma);

/// Probabilistic union of the directed memberships: w + w^T - w * w^T.
FuzzyGraph fuzzy_simplicial_set(const KnnGraph& knn, const SmoothKnn& smooth);

struct CurveParams {
    double a = 0.0;
    double b = 0.0;
};

/// Low-dimensional membership 1 / (1 + a d^(2b)).
double membership_curve(double d, CurveParams ab);
/// Target: 1 below min_dist, exp(-(d - min_dist) / spread) above.
double target_curve(double d, double min_dist, double spread);
/// The 300 sample points in (0, 3 * spread].
std::vector<double> curve_samples(double spread);

/// Least-squares fit of membership_curve to target_curve: coarse log grid
/// on [0.001, 10]^2, then coordinate descent until the relative step is
/// below 1e-6.
CurveParams fit_ab(double min_dist, double spread);

struct LayoutInit {
    Matrix coords;  // n x 2
    bool spectral_fallback = false;
    std::string fallback_reason;
};

/// Spectral mode uses eigenvectors 2 and 3 of the symmetric normalised
/// Laplacian (power iteration with deflation) scaled to max |x| = 10.
/// Random mode, a disconnected graph, or non-convergence give uniform
/// coordinates in [-10, 10]^2.
LayoutInit initialize_layout(const FuzzyGraph& graph, const UmapParams& params);

struct SpectralOptions {
    double tolerance = 1e-8;
    std::size_t max_iterations = 5000;
};

/// Eigenvectors 2 and 3 of the normalised Laplacian, or nullopt when the
/// iteration does not converge.
std::optional<Matrix> spectral_embedding(const FuzzyGraph& graph, std::uint64_t seed,
                                         const SpectralOptions& options = {});

Matrix random_layout(std::size_t n, std::uint64_t seed);

inline constexpr double kGradientClip = 4.0;
inline constexpr double kRepulsionEpsilon = 1e-3;

struct OptimizeOptions {
    // Negative sampling on/off, for isolating the two forces in tests.
    bool attract = true;
    bool repel = true;
};

/// Stochastic gradient descent on the fuzzy cross-entropy. Edge e is
/// sampled every max(mu) / mu(e) epochs; each sample attracts both endpoints
/// and draws negative_sample_rate repulsive points for the source.
Matrix optimize_layout(Matrix coords, const FuzzyGraph& graph, const UmapParams& params, CurveParams ab,
                       const OptimizeOptions& options = {});

struct Projection {
    Matrix coords;  // n x 2
    std::vector<std::string> labels;

    std::size_t size() const noexcept { return coords.rows(); }
};

struct UmapResult {
    Projection projection;
    CurveParams ab;
    bool spectral_fallback = false;
    std::string fallback_reason;
};

UmapResult umap_run(const SentenceMatrix& matrix, const UmapParams& params);
Projection umap_project(const SentenceMatrix& matrix, const UmapParams& params);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_UMAP_HPP
