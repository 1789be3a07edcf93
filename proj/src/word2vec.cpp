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

#include "lingua_atlas/word2vec.hpp"

#include <algorithm>
#include <cmath>

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/random.hpp"

namespace lingua_atlas {

namespace {

// Cumulative noise distribution over vocabulary ids.
class NoiseSampler {
public:
    explicit NoiseSampler(const std::vector<std::size_t>& counts) {
        cumulative_.reserve(counts.size());
        double acc = 0.0;
        for (std::size_t c : counts) {
            acc += std::pow(static_cast<double>(c), 0.75);
            cumulative_.push_back(acc);
        }
    }

    std::size_t sample(Rng& rng) const {
        const double u = rng.uniform() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        if (it == cumulative_.end()) --it;
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

private:
    std::vector<double> cumulative_;
};

double sigmoid(double x) {
    if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

}  // namespace

void Word2VecParams::validate() const {
    if (dim < 1) throw EmbeddingError("word2vec dim must be >= 1");
    if (window < 1) throw EmbeddingError("word2vec window must be >= 1");
    if (negative < 1) throw EmbeddingError("word2vec negative must be >= 1");
    if (!(lr > 0.0)) throw EmbeddingError("word2vec lr must be > 0");
}

EmbeddingModel train_word2vec(std::span<const Sentence> sentences, const Word2VecParams& params) {
    params.validate();
    EmbeddingModel model;
    model.vocab = build_vocabulary(sentences, params.min_count);
    const std::size_t vocab_size = model.vocab.size();
    const std::size_t dim = params.dim;

    Rng rng(params.seed);
    model.w_in = Matrix(vocab_size, dim);
    for (double& v : model.w_in.data()) v = rng.uniform(-0.5, 0.5) / static_cast<double>(dim);
    model.w_out = Matrix(vocab_size, dim);

    // Encode once; filtered tokens are dropped before windowing.
    std::vector<std::vector<std::size_t>> encoded;
    encoded.reserve(sentences.size());
    std::size_t total_tokens = 0;
    for (const auto& s : sentences) {
        std::vector<std::size_t> ids;
        for (const auto& t : s.tokens) {
            if (auto id = model.vocab.find(t)) ids.push_back(*id);
        }
        total_tokens += ids.size();
        encoded.push_back(std::move(ids));
    }

    const NoiseSampler noise(model.vocab.counts);
    const double total_steps = static_cast<double>(std::max<std::size_t>(1, total_tokens * params.epochs));
    const double lr_end = Word2VecParams::kFinalLearningRate;
    std::size_t step = 0;
    std::vector<double> grad_in(dim);

    auto train_pair = [&](std::size_t center, std::size_t context, double lr) {
        auto in = model.w_in.row(center);
        std::fill(grad_in.begin(), grad_in.end(), 0.0);
        for (std::size_t s = 0; s <= params.negative; ++s) {
            std::size_t target = context;
            double label = 1.0;
            if (s > 0) {
                target = noise.sample(rng);
                if (target == context) continue;
                label = 0.0;
            }
            auto out = model.w_out.row(target);
            const double g = (label - sigmoid(dot(in, out))) * lr;
            for (std::size_t d = 0; d < dim; ++d) {
                grad_in[d] += g * out[d];
                out[d] += g * in[d];
            }
        }
        for (std::size_t d = 0; d < dim; ++d) in[d] += grad_in[d];
    };

    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        for (const auto& ids : encoded) {
            for (std::size_t pos = 0; pos < ids.size(); ++pos, ++step) {
                const double progress = static_cast<double>(step) / total_steps;
                const double lr = params.lr + (lr_end - params.lr) * progress;
                const std::size_t lo = pos >= params.window ? pos - params.window : 0;
                const std::size_t hi = std::min(ids.size() - 1, pos + params.window);
                for (std::size_t c = lo; c <= hi; ++c) {
                    if (c != pos) train_pair(ids[pos], ids[c], lr);
                }
            }
        }
    }

    if (!model.w_in.all_finite() || !model.w_out.all_finite()) {
        throw EmbeddingError("word2vec training diverged (non-finite weights)");
    }
    return model;
}

EmbeddingModel train_word2vec(const Corpus& corpus, const Word2VecParams& params) {
    return train_word2vec(std::span<const Sentence>(corpus.sentences), params);
}

double cosine_similarity(std::span<const double> x, std::span<const double> y) {
    const double nx = norm2(x);
    const double ny = norm2(y);
    if (nx == 0.0 || ny == 0.0) return 0.0;
    return dot(x, y) / (nx * ny);
}

}  // namespace lingua_atlas
