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

#ifndef LINGUA_ATLAS_WORD2VEC_HPP
#define LINGUA_ATLAS_WORD2VEC_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lingua_atlas/embed.hpp"

namespace lingua_atlas {

struct Word2VecParams {
    std::size_t dim = 64;
    std::size_t window = 5;
    std::size_t negative = 5;
    std::size_t epochs = 5;
    double lr = 0.025;  // decays linearly to kFinalLearningRate
    std::size_t min_count = 1;
    std::uint64_t seed = 42;

    static constexpr double kFinalLearningRate = 1e-4;

    void validate() const;
};

/// Skip-gram model: rows of w_in are the word vectors, w_out the context
/// (output layer) vectors.
struct EmbeddingModel {
    Vocabulary vocab;
    Matrix w_in;
    Matrix w_out;

    std::size_t dim() const noexcept { return w_in.cols(); }
    std::span<const double> vector(std::size_t id) const { return w_in.row(id); }
};

/// Skip-gram with negative sampling. Noise distribution is proportional to
/// count^0.75, w_in starts uniform in [-0.5/dim, 0.5/dim] and w_out at zero.
/// Sentences are visited in order with a fixed full window, so the result is
/// bit-reproducible for a given seed.
EmbeddingModel train_word2vec(std::span<const Sentence> sentences, const Word2VecParams& params);
EmbeddingModel train_word2vec(const Corpus& corpus, const Word2VecParams& params);

double cosine_similarity(std::span<const double> x, std::span<const double> y);

/// Word vectors read back from a model file.
struct WordVectors {
    std::vector<std::string> tokens;
    Matrix vectors;
};

/// Binary layout, little-endian: "LATL", u32 version, u64 V, u64 dim,
/// V*dim f64 w_in row-major, then V tokens each as u64 byte length + UTF-8.
inline constexpr std::uint32_t kModelFormatVersion = 1;

void save_model(const EmbeddingModel& model, const std::filesystem::path& path);
WordVectors load_word_vectors(const std::filesystem::path& path);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_WORD2VEC_HPP
