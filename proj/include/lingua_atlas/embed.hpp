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

#ifndef LINGUA_ATLAS_EMBED_HPP
#define LINGUA_ATLAS_EMBED_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lingua_atlas/corpus.hpp"
#include "lingua_atlas/matrix.hpp"

namespace lingua_atlas {

/// Token table for one corpus. Ids are dense and follow the lexicographic
/// codepoint order of the tokens (UTF-8 byte order). One sentence counts
/// as one document.
struct Vocabulary {
    std::vector<std::string> tokens;        // id -> token
    std::map<std::string, std::size_t> index;
    std::vector<std::size_t> df;            // sentences containing the token
    std::vector<std::size_t> counts;        // total occurrences
    std::vector<double> unigram_p;          // counts normalised over retained tokens
    std::size_t n_docs = 0;

    std::size_t size() const noexcept { return tokens.size(); }
    std::optional<std::size_t> find(const std::string& token) const;

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

Vocabulary build_vocabulary(std::span<const Sentence> sentences, std::size_t min_count = 1);
Vocabulary build_vocabulary(const Corpus& corpus, std::size_t min_count = 1);

enum class EmbeddingKind { bow, tfidf, w2v_sif };

const char* to_string(EmbeddingKind kind) noexcept;

struct SentenceMatrix {
    Matrix rows;
    std::vector<std::string> labels;
    EmbeddingKind kind = EmbeddingKind::bow;

    std::size_t size() const noexcept { return rows.rows(); }
};

/// Raw token counts; out-of-vocabulary tokens are ignored.
SentenceMatrix count_vectorize(std::span<const Sentence> sentences, const Vocabulary& vocab);

/// idf(t) = ln((1 + N) / (1 + df(t))) + 1.
double smoothed_idf(const Vocabulary& vocab, std::size_t id);

/// tf * idf with raw counts as tf; nonzero rows are L2 normalised and
/// all-OOV rows stay zero.
SentenceMatrix tfidf_vectorize(std::span<const Sentence> sentences, const Vocabulary& vocab);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_EMBED_HPP
