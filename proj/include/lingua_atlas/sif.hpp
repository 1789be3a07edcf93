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

#ifndef LINGUA_ATLAS_SIF_HPP
#define LINGUA_ATLAS_SIF_HPP

#include <span>
#include <vector>

#include "lingua_atlas/word2vec.hpp"

namespace lingua_atlas {

struct SifParams {
    double a = 1e-3;

    void validate() const;
};

struct PowerIterationOptions {
    double tolerance = 1e-9;
    std::size_t max_iterations = 1000;
};

/// Dominant right singular vector of the uncentered matrix, by power
/// iteration on X^T X. Unit norm, first nonzero entry positive.
/// Throws EmbeddingError on an all-zero matrix.
std::vector<double> first_principal_component(const Matrix& matrix, const PowerIterationOptions& options = {});

/// Frequency-weighted mean of word vectors, weights a / (a + p(t)).
/// OOV tokens are skipped and the sum is divided by the in-vocabulary token
/// count; sentences with none produce a zero row.
SentenceMatrix sif_weighted_average(std::span<const Sentence> sentences, const EmbeddingModel& model,
                                    const SifParams& sif);

/// Removes from every nonzero row its projection on the first principal
/// component of the nonzero rows. Returns the component removed.
std::vector<double> remove_first_component(Matrix& rows);

/// sif_weighted_average followed by remove_first_component.
SentenceMatrix sif_sentence_embed(std::span<const Sentence> sentences, const EmbeddingModel& model,
                                  const SifParams& sif);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_SIF_HPP
