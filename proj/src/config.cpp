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

#include "lingua_atlas/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lingua_atlas/error.hpp"

namespace lingua_atlas {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_integer(const std::string& key, const std::string& value) {
    T out{};
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError("invalid integer for " + key + ": '" + value + "'");
    return out;
}

double parse_real(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (value.empty() || pos != value.size()) throw ConfigError("invalid number for " + key + ": '" + value + "'");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + value + "'");
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const char* to_string(EmbeddingChoice e) noexcept {
    switch (e) {
        case EmbeddingChoice::bow: return "bow";
        case EmbeddingChoice::tfidf: return "tfidf";
        case EmbeddingChoice::word2vec: return "word2vec";
    }
    return "unknown";
}

EmbeddingChoice parse_embedding(const std::string& name) {
    if (name == "bow") return EmbeddingChoice::bow;
    if (name == "tfidf") return EmbeddingChoice::tfidf;
    if (name == "word2vec") return EmbeddingChoice::word2vec;
    throw ConfigError("unknown embedding '" + name + "' (expected bow, tfidf or word2vec)");
}

void RunConfig::validate() const {
    if (corpus_dir.empty()) throw ConfigError("corpus_dir is required");
    if (output_dir.empty()) throw ConfigError("output_dir is required");
    if (max_sentences_per_language < 1) throw ConfigError("max_sentences_per_language must be >= 1");
    if (purity_k < 1) throw ConfigError("purity_k must be >= 1");
    if (!(overlap_threshold >= 0.0 && overlap_threshold <= 1.0)) {
        throw ConfigError("overlap_threshold must be in [0, 1]");
    }
    try {
        umap.validate();
        w2v.validate();
        sif.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

void apply_config_value(RunConfig& c, const std::string& key, const std::string& value) {
    using u64 = std::uint64_t;
    using sz = std::size_t;
    if (key == "corpus_dir") c.corpus_dir = value;
    else if (key == "embedding") c.embedding = parse_embedding(value);
    else if (key == "line_per_sentence") c.line_per_sentence = parse_bool(key, value);
    else if (key == "max_sentences_per_language") c.max_sentences_per_language = parse_integer<sz>(key, value);
    else if (key == "purity_k") c.purity_k = parse_integer<sz>(key, value);
    else if (key == "overlap_threshold") c.overlap_threshold = parse_real(key, value);
    else if (key == "seed") c.seed = parse_integer<u64>(key, value);
    else if (key == "output_dir") c.output_dir = value;
    else if (key == "save_model") c.save_model = parse_bool(key, value);
    else if (key == "umap.n_neighbors") c.umap.n_neighbors = parse_integer<sz>(key, value);
    else if (key == "umap.min_dist") c.umap.min_dist = parse_real(key, value);
    else if (key == "umap.spread") c.umap.spread = parse_real(key, value);
    else if (key == "umap.n_epochs") c.umap.n_epochs = parse_integer<sz>(key, value);
    else if (key == "umap.learning_rate") c.umap.learning_rate = parse_real(key, value);
    else if (key == "umap.negative_sample_rate") c.umap.negative_sample_rate = parse_integer<sz>(key, value);
    else if (key == "umap.metric") {
        if (value == "cosine") c.umap.metric = Metric::cosine;
        else if (value == "euclidean") c.umap.metric = Metric::euclidean;
        else throw ConfigError("unknown metric '" + value + "'");
    } else if (key == "umap.init") {
        if (value == "spectral") c.umap.init = InitMode::spectral;
        else if (value == "random") c.umap.init = InitMode::random;
        else throw ConfigError("unknown init '" + value + "'");
    } else if (key == "umap.seed") c.umap_seed = parse_integer<u64>(key, value);
    else if (key == "umap.a") c.umap.a = parse_real(key, value);
    else if (key == "umap.b") c.umap.b = parse_real(key, value);
    else if (key == "w2v.dim") c.w2v.dim = parse_integer<sz>(key, value);
    else if (key == "w2v.window") c.w2v.window = parse_integer<sz>(key, value);
    else if (key == "w2v.negative") c.w2v.negative = parse_integer<sz>(key, value);
    else if (key == "w2v.epochs") c.w2v.epochs = parse_integer<sz>(key, value);
    else if (key == "w2v.lr") c.w2v.lr = parse_real(key, value);
    else if (key == "w2v.min_count") c.w2v.min_count = parse_integer<sz>(key, value);
    else if (key == "w2v.seed") c.w2v_seed = parse_integer<u64>(key, value);
    else if (key == "sif.a") c.sif.a = parse_real(key, value);
    else throw ConfigError("unknown config key '" + key + "'");
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream lines(text);
    std::size_t lineno = 0;
    for (std::string line; std::getline(lines, line);) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (!value.empty() && value.front() == '"') {
            const auto close = value.find('"', 1);
            const std::string rest = close == std::string::npos ? "x" : trim(value.substr(close + 1));
            if (!rest.empty() && rest.front() != '#') {
                throw ConfigError("line " + std::to_string(lineno) + ": malformed quoted value");
            }
            value = value.substr(1, close - 1);
        } else {
            // A '#' after whitespace starts a trailing comment.
            for (std::size_t i = 1; i < value.size(); ++i) {
                if (value[i] == '#' && (value[i - 1] == ' ' || value[i - 1] == '\t')) {
                    value = trim(value.substr(0, i));
                    break;
                }
            }
        }
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (!out.emplace(key, value).second) {
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
    }
    return out;
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    RunConfig config;
    for (const auto& [key, value] : parse_key_values(text)) apply_config_value(config, key, value);
    if (!base_dir.empty()) {
        if (!config.corpus_dir.empty() && config.corpus_dir.is_relative()) config.corpus_dir = base_dir / config.corpus_dir;
        if (config.output_dir.is_relative()) config.output_dir = base_dir / config.output_dir;
    }
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path());
}

std::map<std::string, std::string> config_entries(const RunConfig& c) {
    std::map<std::string, std::string> e;
    e["corpus_dir"] = c.corpus_dir.string();
    e["embedding"] = to_string(c.embedding);
    e["line_per_sentence"] = c.line_per_sentence ? "true" : "false";
    e["max_sentences_per_language"] = std::to_string(c.max_sentences_per_language);
    e["purity_k"] = std::to_string(c.purity_k);
    e["overlap_threshold"] = format_real(c.overlap_threshold);
    e["seed"] = std::to_string(c.seed);
    e["output_dir"] = c.output_dir.string();
    e["save_model"] = c.save_model ? "true" : "false";
    e["umap.n_neighbors"] = std::to_string(c.umap.n_neighbors);
    e["umap.min_dist"] = format_real(c.umap.min_dist);
    e["umap.spread"] = format_real(c.umap.spread);
    e["umap.n_epochs"] = std::to_string(c.umap.n_epochs);
    e["umap.learning_rate"] = format_real(c.umap.learning_rate);
    e["umap.negative_sample_rate"] = std::to_string(c.umap.negative_sample_rate);
    e["umap.metric"] = to_string(c.umap.metric);
    e["umap.init"] = to_string(c.umap.init);
    e["umap.seed"] = std::to_string(c.effective_umap_seed());
    if (c.umap.a) e["umap.a"] = format_real(*c.umap.a);
    if (c.umap.b) e["umap.b"] = format_real(*c.umap.b);
    e["w2v.dim"] = std::to_string(c.w2v.dim);
    e["w2v.window"] = std::to_string(c.w2v.window);
    e["w2v.negative"] = std::to_string(c.w2v.negative);
    e["w2v.epochs"] = std::to_string(c.w2v.epochs);
    e["w2v.lr"] = format_real(c.w2v.lr);
    e["w2v.min_count"] = std::to_string(c.w2v.min_count);
    e["w2v.seed"] = std::to_string(c.effective_w2v_seed());
    e["sif.a"] = format_real(c.sif.a);
    return e;
}

}  // namespace lingua_atlas
