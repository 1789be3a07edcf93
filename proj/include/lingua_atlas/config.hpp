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

#ifndef LINGUA_ATLAS_CONFIG_HPP
#define LINGUA_ATLAS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "lingua_atlas/metrics.hpp"
#include "lingua_atlas/sif.hpp"
#include "lingua_atlas/umap.hpp"
#include "lingua_atlas/word2vec.hpp"

namespace lingua_atlas {

enum class EmbeddingChoice { bow, tfidf, word2vec };

const char* to_string(EmbeddingChoice e) noexcept;
EmbeddingChoice parse_embedding(const std::string& name);

struct RunConfig {
    std::filesystem::path corpus_dir;
    EmbeddingChoice embedding = EmbeddingChoice::tfidf;
    bool line_per_sentence = false;
    std::size_t max_sentences_per_language = 500;
    UmapParams umap;
    Word2VecParams w2v;
    SifParams sif;
    std::size_t purity_k = kDefaultPurityK;
    double overlap_threshold = kDefaultOverlapThreshold;
    std::uint64_t seed = 42;
    std::filesystem::path output_dir = "out";
    // Also write the trained word vectors to model.bin (word2vec only).
    bool save_model = false;

    // Stage seeds; both follow `seed` unless set explicitly.
    std::optional<std::uint64_t> umap_seed;
    std::optional<std::uint64_t> w2v_seed;

    std::uint64_t effective_umap_seed() const { return umap_seed.value_or(seed); }
    std::uint64_t effective_w2v_seed() const { return w2v_seed.value_or(seed); }

    void validate() const;
};

/// Sets one dotted key (e.g. "umap.n_neighbors") from its text value.
/// Throws ConfigError on unknown keys or malformed values.
void apply_config_value(RunConfig& config, const std::string& key, const std::string& value);

/// Parses `key = value` lines. Blank lines and lines starting with '#' are
/// ignored; values may be double-quoted.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Relative corpus_dir and output_dir values resolve against `base_dir`.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Every key with its effective value, in the same syntax the parser reads.
std::map<std::string, std::string> config_entries(const RunConfig& config);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_CONFIG_HPP
