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

#include "lingua_atlas/sif.hpp"

#include <cmath>

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/random.hpp"

namespace lingua_atlas {

void SifParams::validate() const {
    if (!(a > 0.0)) throw EmbeddingError("sif.a must be > 0");
}

std::vector<double> first_principal_component(const Matrix& matrix, const PowerIterationOptions& options) {
    const std::size_t n = matrix.rows();
    const std::size_t d = matrix.cols();
    bool any_nonzero = false;
    for (double v : matrix.data()) {
        if (v != 0.0) {
            any_nonzero = true;
            break;
        }
    }
    if (n == 0 || d == 0 || !any_nonzero) {
        throw EmbeddingError("principal component of an all-zero matrix is undefined");
    }

    // Fixed pseudo-random start so no eigenvector is systematically missed.
    Rng rng(0x5eed0f9caULL);
    std::vector<double> v(d);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);

    std::vector<double> projected(n);
    std::vector<double> next(d);
    auto normalise = [](std::vector<double>& x) {
        const double nrm = norm2(x);
        for (double& e : x) e /= nrm;
        return nrm;
    };
    normalise(v);

    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        // next = X^T (X v), i.e. the Gram matrix applied to v.
        for (std::size_t r = 0; r < n; ++r) projected[r] = dot(matrix.row(r), v);
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t r = 0; r < n; ++r) {
            const auto row = matrix.row(r);
            for (std::size_t c = 0; c < d; ++c) next[c] += projected[r] * row[c];
        }
        if (normalise(next) == 0.0) {
            // Start vector orthogonal to the row space; restart on a row.
            next.assign(matrix.row(0).begin(), matrix.row(0).end());
            for (std::size_t r = 0; norm2(next) == 0.0 && r + 1 < n; ++r) {
                next.assign(matrix.row(r + 1).begin(), matrix.row(r + 1).end());
            }
            normalise(next);
        }
        double delta = 0.0;
        for (std::size_t c = 0; c < d; ++c) delta += (next[c] - v[c]) * (next[c] - v[c]);
        v.swap(next);
        if (std::sqrt(delta) < options.tolerance) break;
    }

    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0) {
                for (double& e : v) e = -e;
            }
            break;
        }
    }
    normalise(v);
    return v;
}

SentenceMatrix sif_weighted_average(std::span<const Sentence> sentences, const EmbeddingModel& model,
                                    const SifParams& sif) {
    sif.validate();
    const std::size_t dim = model.dim();
    SentenceMatrix out;
    out.kind = EmbeddingKind::w2v_sif;
    out.rows = Matrix(sentences.size(), dim);
    out.labels.reserve(sentences.size());
    bool any = false;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        auto row = out.rows.row(i);
        std::size_t used = 0;
        for (const auto& t : sentences[i].tokens) {
            auto id = model.vocab.find(t);
            if (!id) continue;
            const double w = sif.a / (sif.a + model.vocab.unigram_p[*id]);
            const auto vec = model.vector(*id);
            for (std::size_t d = 0; d < dim; ++d) row[d] += w * vec[d];
            ++used;
        }
        if (used > 0) {
            for (double& x : row) x /= static_cast<double>(used);
            any = true;
        }
        out.labels.push_back(sentences[i].label);
    }
    if (!any) {
        throw EmbeddingError("every sentence is empty or out of vocabulary");
    }
    return out;
}

std::vector<double> remove_first_component(Matrix& rows) {
    std::vector<std::size_t> nonzero;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        if (norm2(rows.row(r)) > 0.0) nonzero.push_back(r);
    }
    Matrix stacked(nonzero.size(), rows.cols());
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
        const auto src = rows.row(nonzero[k]);
        std::copy(src.begin(), src.end(), stacked.row(k).begin());
    }
    std::vector<double> pc = first_principal_component(stacked);
    for (std::size_t r : nonzero) {
        auto row = rows.row(r);
        const double proj = dot(row, pc);
        for (std::size_t c = 0; c < row.size(); ++c) row[c] -= proj * pc[c];
    }
    return pc;
}

SentenceMatrix sif_sentence_embed(std::span<const Sentence> sentences, const EmbeddingModel& model,
                                  const SifParams& sif) {
    SentenceMatrix out = sif_weighted_average(sentences, model, sif);
    remove_first_component(out.rows);
    return out;
}

}  // namespace lingua_atlas
