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

#include "doctest.h"
#include "lingua_atlas/error.hpp"
#include "support/synthetic.hpp"

using namespace lingua_atlas;

TEST_CASE("config defaults") {
    const RunConfig c;
    CHECK(c.embedding == EmbeddingChoice::tfidf);
    CHECK(c.max_sentences_per_language == 500);
    CHECK(c.purity_k == 10);
    CHECK(c.overlap_threshold == 0.7);
    CHECK(c.umap.n_neighbors == 15);
    CHECK(c.umap.min_dist == 0.1);
    CHECK(c.umap.spread == 1.0);
    CHECK(c.umap.n_epochs == 500);
    CHECK(c.umap.learning_rate == 1.0);
    CHECK(c.umap.negative_sample_rate == 5);
    CHECK(c.umap.metric == Metric::cosine);
    CHECK(c.umap.init == InitMode::spectral);
    CHECK(c.w2v.dim == 64);
    CHECK(c.w2v.window == 5);
    CHECK(c.w2v.negative == 5);
    CHECK(c.w2v.epochs == 5);
    CHECK(c.w2v.lr == 0.025);
    CHECK(c.w2v.min_count == 1);
    CHECK(c.sif.a == 1e-3);
}

TEST_CASE("config parsing with dotted keys") {
    const auto c = parse_config(
        "# comment\n"
        "corpus_dir = corpora/bible\n"
        "embedding = word2vec\n"
        "\n"
        "line_per_sentence = true\n"
        "umap.n_neighbors = 7\n"
        "umap.metric = euclidean\n"
        "umap.init = random\n"
        "umap.a = 1.5\n"
        "umap.b = 0.9\n"
        "w2v.dim = 32\n"
        "w2v.seed = 5\n"
        "sif.a = 0.01\n"
        "seed = 9\n"
        "output_dir = \"out dir\"\n",
        "/base");
    CHECK(c.corpus_dir == "/base/corpora/bible");
    CHECK(c.output_dir == "/base/out dir");
    CHECK(c.embedding == EmbeddingChoice::word2vec);
    CHECK(c.line_per_sentence);
    CHECK(c.umap.n_neighbors == 7);
    CHECK(c.umap.metric == Metric::euclidean);
    CHECK(c.umap.init == InitMode::random);
    CHECK(*c.umap.a == 1.5);
    CHECK(c.w2v.dim == 32);
    CHECK(c.effective_w2v_seed() == 5);
    CHECK(c.effective_umap_seed() == 9);
    CHECK(c.sif.a == 0.01);
}

TEST_CASE("config trailing comments and quotes") {
    const auto kv = parse_key_values(
        "a = 1   # one\n"
        "b = x#y\n"
        "c = \"with # hash\"  # comment\n"
        "d = \"\"\n");
    CHECK(kv.at("a") == "1");
    CHECK(kv.at("b") == "x#y");
    CHECK(kv.at("c") == "with # hash");
    CHECK(kv.at("d") == "");
    CHECK_THROWS_AS(parse_key_values("a = \"open\n"), ConfigError);
    CHECK_THROWS_AS(parse_key_values("a = \"x\" y\n"), ConfigError);
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("umap.n_neighbors = seven\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("umap.min_dist = 0.1x\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("embedding = glove\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("seed = 1\nseed = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("line_per_sentence = maybe\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/lingua.conf"), ConfigError);

    RunConfig c;
    CHECK_THROWS_AS(c.validate(), ConfigError);  // corpus_dir missing
    c.corpus_dir = "x";
    c.max_sentences_per_language = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.max_sentences_per_language = 1;
    c.umap.n_neighbors = 1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.umap.n_neighbors = 2;
    c.w2v.window = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.w2v.window = 1;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("config entries round-trip through the parser") {
    RunConfig c;
    c.corpus_dir = "/data/c";
    c.output_dir = "/data/o";
    c.embedding = EmbeddingChoice::bow;
    c.umap.min_dist = 0.3;
    c.umap.a = 2.0;
    c.umap.b = 0.75;
    c.overlap_threshold = 0.65;
    c.seed = 1234;
    std::string text;
    for (const auto& [k, v] : config_entries(c)) text += k + " = " + v + "\n";
    const RunConfig back = parse_config(text);
    CHECK(config_entries(back) == config_entries(c));
}
