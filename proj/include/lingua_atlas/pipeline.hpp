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

#ifndef LINGUA_ATLAS_PIPELINE_HPP
#define LINGUA_ATLAS_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "lingua_atlas/config.hpp"
#include "lingua_atlas/corpus.hpp"
#include "lingua_atlas/metrics.hpp"
#include "lingua_atlas/umap.hpp"

#include "json.hpp"

namespace lingua_atlas {

const char* version() noexcept;

inline constexpr const char* kCoordsFile = "coords.csv";
inline constexpr const char* kPlotFile = "plot.svg";
inline constexpr const char* kReportFile = "report.json";
inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kModelFile = "model.bin";

struct Analysis {
    Projection projection;
    ClusterReport report;
    CurveParams curve;
    bool spectral_fallback = false;
    std::string fallback_reason;
    std::size_t effective_n_neighbors = 0;
    std::size_t effective_purity_k = 0;
    std::map<std::string, std::size_t> sentences_used;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, double>> timings_ms;
};

/// Keeps the first `max_per_language` sentences of every label.
std::vector<Sentence> truncate_per_language(const std::vector<Sentence>& sentences, std::size_t max_per_language);

SentenceMatrix embed_sentences(const std::vector<Sentence>& sentences, const RunConfig& config,
                               EmbeddingModel* trained = nullptr);

/// Truncation, embedding, projection and metrics on an in-memory corpus.
/// n_neighbors and purity_k are lowered (with a warning) when the corpus
/// is too small for them.
Analysis analyze_corpus(const Corpus& corpus, const RunConfig& config, EmbeddingModel* trained = nullptr);

struct PipelineResult {
    Analysis analysis;
    nlohmann::json manifest;
};

/// Loads the corpus, analyses it, and writes coords.csv, plot.svg,
/// report.json and manifest.json to config.output_dir. Outputs appear only
/// when every stage succeeded.
PipelineResult run_pipeline(const RunConfig& config);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_PIPELINE_HPP
