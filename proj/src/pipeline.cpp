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

#include "lingua_atlas/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/log.hpp"
#include "lingua_atlas/output.hpp"
#include "lingua_atlas/sif.hpp"
#include "lingua_atlas/word2vec.hpp"

namespace lingua_atlas {

namespace fs = std::filesystem;

namespace {

class StageTimer {
public:
    StageTimer(std::vector<std::pair<std::string, double>>& sink, std::string name)
        : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {
        log::info("stage " + name_);
    }
    ~StageTimer() {
        const auto dt = std::chrono::steady_clock::now() - start_;
        sink_.emplace_back(name_, std::chrono::duration<double, std::milli>(dt).count());
    }

private:
    std::vector<std::pair<std::string, double>>& sink_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw IoError("sha256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xF];
    }
    return out;
}

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorpusError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Files are staged under a temporary name and renamed once all succeed.
class OutputStaging {
public:
    explicit OutputStaging(fs::path dir) : dir_(std::move(dir)) {}
    ~OutputStaging() {
        if (committed_) return;
        std::error_code ec;
        for (const auto& name : names_) fs::remove(staged(name), ec);
    }

    fs::path add(const std::string& name) {
        names_.push_back(name);
        return staged(name);
    }

    void commit() {
        for (const auto& name : names_) {
            std::error_code ec;
            fs::rename(staged(name), dir_ / name, ec);
            if (ec) throw IoError("cannot move " + name + " into " + dir_.string() + ": " + ec.message());
        }
        committed_ = true;
    }

private:
    fs::path staged(const std::string& name) const { return dir_ / ("." + name + ".partial"); }

    fs::path dir_;
    std::vector<std::string> names_;
    bool committed_ = false;
};

}  // namespace

const char* version() noexcept {
#ifdef LINGUA_ATLAS_VERSION
    return LINGUA_ATLAS_VERSION;
#else
    return "dev";
#endif
}

std::vector<Sentence> truncate_per_language(const std::vector<Sentence>& sentences, std::size_t max_per_language) {
    std::map<std::string, std::size_t> taken;
    std::vector<Sentence> out;
    for (const auto& s : sentences) {
        if (taken[s.label]++ < max_per_language) out.push_back(s);
    }
    return out;
}

SentenceMatrix embed_sentences(const std::vector<Sentence>& sentences, const RunConfig& config,
                               EmbeddingModel* trained) {
    switch (config.embedding) {
        case EmbeddingChoice::bow: return count_vectorize(sentences, build_vocabulary(sentences));
        case EmbeddingChoice::tfidf: return tfidf_vectorize(sentences, build_vocabulary(sentences));
        case EmbeddingChoice::word2vec: {
            Word2VecParams params = config.w2v;
            params.seed = config.effective_w2v_seed();
            EmbeddingModel model = train_word2vec(sentences, params);
            SentenceMatrix m = sif_sentence_embed(sentences, model, config.sif);
            if (trained != nullptr) *trained = std::move(model);
            return m;
        }
    }
    throw EmbeddingError("unknown embedding");
}

Analysis analyze_corpus(const Corpus& corpus, const RunConfig& config, EmbeddingModel* trained) {
    Analysis out;
    std::vector<Sentence> sentences;
    {
        StageTimer t(out.timings_ms, "truncate");
        sentences = truncate_per_language(corpus.sentences, config.max_sentences_per_language);
        for (const auto& s : sentences) ++out.sentences_used[s.label];
    }

    SentenceMatrix matrix;
    {
        StageTimer t(out.timings_ms, "embed");
        matrix = embed_sentences(sentences, config, trained);
    }

    {
        StageTimer t(out.timings_ms, "umap");
        const std::size_t n = matrix.size();
        if (n < 3) {
            throw ProjectionError("projection needs at least 3 sentences, got " + std::to_string(n));
        }
        UmapParams params = config.umap;
        params.seed = config.effective_umap_seed();
        if (params.n_neighbors >= n) {
            out.warnings.push_back("n_neighbors lowered from " + std::to_string(params.n_neighbors) + " to " +
                                   std::to_string(n - 1) + " (corpus has " + std::to_string(n) + " sentences)");
            params.n_neighbors = n - 1;
        }
        out.effective_n_neighbors = params.n_neighbors;
        UmapResult r = umap_run(matrix, params);
        out.projection = std::move(r.projection);
        out.curve = r.ab;
        out.spectral_fallback = r.spectral_fallback;
        out.fallback_reason = r.fallback_reason;
        if (r.spectral_fallback) out.warnings.push_back("spectral initialisation fell back to random: " + r.fallback_reason);
    }

    {
        StageTimer t(out.timings_ms, "metrics");
        std::size_t smallest = SIZE_MAX;
        for (const auto& [label, count] : out.sentences_used) smallest = std::min(smallest, count);
        std::size_t k = config.purity_k;
        if (smallest <= k) {
            if (smallest < 2) {
                throw ProjectionError("purity needs at least 2 sentences per language");
            }
            out.warnings.push_back("purity_k lowered from " + std::to_string(k) + " to " +
                                   std::to_string(smallest - 1) + " (smallest language has " +
                                   std::to_string(smallest) + " sentences)");
            k = smallest - 1;
        }
        out.effective_purity_k = k;
        out.report = overlap_report(out.projection, k, config.overlap_threshold);
    }
    for (const auto& w : out.warnings) log::warn(w);
    return out;
}

PipelineResult run_pipeline(const RunConfig& config) {
    config.validate();
    const auto wall_start = std::chrono::steady_clock::now();

    std::vector<std::pair<std::string, double>> load_timing;
    Corpus corpus;
    nlohmann::json corpus_json = nlohmann::json::array();
    {
        StageTimer t(load_timing, "load_corpus");
        corpus = load_corpus(config.corpus_dir, CorpusOptions{config.line_per_sentence});
        for (const auto& path : list_corpus_files(config.corpus_dir)) {
            const std::string bytes = read_bytes(path);
            nlohmann::json entry;
            entry["file"] = path.filename().string();
            entry["label"] = path.stem().string();
            entry["bytes"] = bytes.size();
            entry["sha256"] = sha256_hex(bytes);
            corpus_json.push_back(entry);
        }
    }

    PipelineResult result;
    EmbeddingModel model;
    result.analysis = analyze_corpus(corpus, config, &model);
    Analysis& a = result.analysis;
    a.timings_ms.insert(a.timings_ms.begin(), load_timing.begin(), load_timing.end());

    std::map<std::string, std::size_t> loaded;
    for (const auto& s : corpus.sentences) ++loaded[s.label];
    for (auto& entry : corpus_json) {
        const std::string label = entry["label"];
        for (const auto& doc : corpus.docs) {
            if (doc.label == label) entry["writing_system"] = to_string(doc.writing_system);
        }
        entry["sentences_loaded"] = loaded[label];
        entry["sentences_used"] = a.sentences_used[label];
    }

    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec) throw IoError("cannot create output directory " + config.output_dir.string() + ": " + ec.message());

    OutputStaging staging(config.output_dir);
    std::vector<std::pair<std::string, double>> write_timing;
    {
        StageTimer t(write_timing, "write_outputs");
        emit_csv(a.projection, staging.add(kCoordsFile));
        const SvgSummary svg = emit_svg(a.projection, staging.add(kPlotFile));
        if (svg.palette_cycled) {
            a.warnings.push_back(std::to_string(svg.label_count) + " labels exceed the " +
                                 std::to_string(kPalette.size()) + "-colour palette; colours repeat");
            log::warn(a.warnings.back());
        }
        write_text_file(staging.add(kReportFile), report_to_json(a.report).dump(2) + "\n");
        if (config.save_model && config.embedding == EmbeddingChoice::word2vec) {
            save_model(model, staging.add(kModelFile));
        }
    }
    a.timings_ms.insert(a.timings_ms.end(), write_timing.begin(), write_timing.end());

    nlohmann::json m;
    m["artifact"] = "lingua-atlas";
    m["version"] = version();
    m["config"] = config_entries(config);
    m["corpus"] = corpus_json;
    m["effective"] = {{"umap.n_neighbors", a.effective_n_neighbors},
                      {"purity_k", a.effective_purity_k},
                      {"umap.a", a.curve.a},
                      {"umap.b", a.curve.b}};
    m["spectral_fallback"] = a.spectral_fallback;
    m["spectral_fallback_reason"] = a.fallback_reason;
    m["warnings"] = a.warnings;
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [name, ms] : a.timings_ms) timings[name] = ms;
    timings["total"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - wall_start).count();
    m["timings_ms"] = timings;
    write_text_file(staging.add(kManifestFile), m.dump(2) + "\n");

    staging.commit();
    result.manifest = std::move(m);
    return result;
}

}  // namespace lingua_atlas
