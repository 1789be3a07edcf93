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

#include <set>

#include "lingua_atlas/embed.hpp"
#include "lingua_atlas/error.hpp"

namespace lingua_atlas {

std::optional<std::size_t> Vocabulary::find(const std::string& token) const {
    auto it = index.find(token);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

Vocabulary build_vocabulary(std::span<const Sentence> sentences, std::size_t min_count) {
    if (sentences.empty()) {
        throw EmbeddingError("cannot build a vocabulary from an empty corpus");
    }
    // std::map keeps keys in byte order, which for UTF-8 is codepoint order.
    std::map<std::string, std::pair<std::size_t, std::size_t>> stats;  // count, df
    for (const auto& s : sentences) {
        std::set<std::string_view> seen;
        for (const auto& t : s.tokens) {
            auto& entry = stats[t];
            ++entry.first;
            if (seen.insert(t).second) ++entry.second;
        }
    }

    Vocabulary vocab;
    vocab.n_docs = sentences.size();
    std::size_t total = 0;
    for (const auto& [token, st] : stats) {
        if (st.first < min_count) continue;
        vocab.index.emplace(token, vocab.tokens.size());
        vocab.tokens.push_back(token);
        vocab.counts.push_back(st.first);
        vocab.df.push_back(st.second);
        total += st.first;
    }
    if (vocab.tokens.empty()) {
        throw EmbeddingError("vocabulary is empty after min_count filtering");
    }
    vocab.unigram_p.reserve(vocab.size());
    for (std::size_t c : vocab.counts) {
        vocab.unigram_p.push_back(static_cast<double>(c) / static_cast<double>(total));
    }
    return vocab;
}

Vocabulary build_vocabulary(const Corpus& corpus, std::size_t min_count) {
    return build_vocabulary(std::span<const Sentence>(corpus.sentences), min_count);
}

}  // namespace lingua_atlas
