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

#include "lingua_atlas/embed.hpp"

namespace lingua_atlas {

const char* to_string(EmbeddingKind kind) noexcept {
    switch (kind) {
        case EmbeddingKind::bow: return "bow";
        case EmbeddingKind::tfidf: return "tfidf";
        case EmbeddingKind::w2v_sif: return "w2v-sif";
    }
    return "unknown";
}

SentenceMatrix count_vectorize(std::span<const Sentence> sentences, const Vocabulary& vocab) {
    SentenceMatrix out;
    out.kind = EmbeddingKind::bow;
    out.rows = Matrix(sentences.size(), vocab.size());
    out.labels.reserve(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        for (const auto& t : sentences[i].tokens) {
            if (auto id = vocab.find(t)) out.rows(i, *id) += 1.0;
        }
        out.labels.push_back(sentences[i].label);
    }
    return out;
}

double smoothed_idf(const Vocabulary& vocab, std::size_t id) {
    const double n = static_cast<double>(vocab.n_docs);
    const double df = static_cast<double>(vocab.df[id]);
    return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

SentenceMatrix tfidf_vectorize(std::span<const Sentence> sentences, const Vocabulary& vocab) {
    SentenceMatrix out = count_vectorize(sentences, vocab);
    out.kind = EmbeddingKind::tfidf;

    std::vector<double> idf(vocab.size());
    for (std::size_t j = 0; j < vocab.size(); ++j) idf[j] = smoothed_idf(vocab, j);

    for (std::size_t i = 0; i < out.rows.rows(); ++i) {
        auto row = out.rows.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) row[j] *= idf[j];
        const double norm = norm2(row);
        if (norm > 0.0) {
            for (double& v : row) v /= norm;
        }
    }
    return out;
}

}  // namespace lingua_atlas
