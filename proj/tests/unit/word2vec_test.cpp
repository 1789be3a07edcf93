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

#include "lingua_atlas/word2vec.hpp"

#include "doctest.h"
#include "lingua_atlas/error.hpp"
#include "support/synthetic.hpp"

using namespace lingua_atlas;

namespace {

std::vector<Sentence> ten_token_corpus() {
    const auto pool = testing::token_pool("t", 10);
    std::vector<Sentence> out;
    for (std::size_t s = 0; s < 20; ++s) {
        Sentence sentence{{}, "l"};
        for (std::size_t t = 0; t < 6; ++t) sentence.tokens.push_back(pool[(s + 3 * t) % pool.size()]);
        out.push_back(sentence);
    }
    return out;
}

}  // namespace

TEST_CASE("word2vec shape contract") {
    Word2VecParams params;
    params.dim = 16;
    const auto model = train_word2vec(ten_token_corpus(), params);
    CHECK(model.vocab.size() == 10);
    CHECK(model.w_in.rows() == 10);
    CHECK(model.w_in.cols() == 16);
    CHECK(model.w_out.rows() == 10);
    CHECK(model.w_out.cols() == 16);
    CHECK(model.w_in.all_finite());
    CHECK(model.w_out.all_finite());
}

TEST_CASE("word2vec min_count drops rare tokens") {
    auto corpus = ten_token_corpus();
    corpus.push_back(Sentence{{"rare", "t0"}, "l"});
    Word2VecParams params;
    params.dim = 8;
    params.min_count = 2;
    const auto model = train_word2vec(corpus, params);
    CHECK_FALSE(model.vocab.find("rare").has_value());
    CHECK(model.vocab.find("t0").has_value());
}

TEST_CASE("word2vec initialisation bounds with zero epochs") {
    Word2VecParams params;
    params.dim = 20;
    params.epochs = 0;
    const auto model = train_word2vec(ten_token_corpus(), params);
    for (double v : model.w_in.data()) {
        CHECK(v >= -0.5 / 20.0);
        CHECK(v <= 0.5 / 20.0);
    }
    for (double v : model.w_out.data()) CHECK(v == 0.0);
}

TEST_CASE("word2vec is bit-reproducible for a seed") {
    const auto corpus = testing::cooccurrence_corpus(100, 3);
    Word2VecParams params;
    params.seed = 99;
    params.dim = 12;
    const auto m1 = train_word2vec(corpus, params);
    const auto m2 = train_word2vec(corpus, params);
    CHECK(m1.w_in == m2.w_in);
    CHECK(m1.w_out == m2.w_out);
    params.seed = 100;
    CHECK_FALSE(train_word2vec(corpus, params).w_in == m1.w_in);
}

TEST_CASE("word2vec separates co-occurrence groups") {
    const auto corpus = testing::cooccurrence_corpus(500, 42);
    for (std::uint64_t seed : {1ULL, 42ULL, 1337ULL}) {
        Word2VecParams params;
        params.seed = seed;
        const auto model = train_word2vec(corpus, params);
        const auto v = [&](const char* t) { return model.vector(*model.vocab.find(t)); };
        CAPTURE(seed);
        CHECK(cosine_similarity(v("x1"), v("x2")) > cosine_similarity(v("x1"), v("y1")));
        CHECK(cosine_similarity(v("y1"), v("y2")) > cosine_similarity(v("y2"), v("x2")));
    }
}

TEST_CASE("word2vec parameter validation") {
    Word2VecParams params;
    params.dim = 0;
    CHECK_THROWS_AS(train_word2vec(ten_token_corpus(), params), EmbeddingError);
    params = {};
    params.lr = 0.0;
    CHECK_THROWS_AS(train_word2vec(ten_token_corpus(), params), EmbeddingError);
    params = {};
    CHECK_THROWS_AS(train_word2vec(std::vector<Sentence>{}, params), EmbeddingError);
}

TEST_CASE("model file layout and reload") {
    Word2VecParams params;
    params.dim = 3;
    params.epochs = 1;
    const auto model = train_word2vec(std::vector<Sentence>{{{"a", "bé"}, "l"}}, params);
    testing::TempDir dir("model");
    save_model(model, dir / "m.bin");
    const std::string bytes = testing::read_file(dir / "m.bin");
    // header 4 + 4 + 8 + 8, weights 2*3*8, tokens (8+1) + (8+3)
    REQUIRE(bytes.size() == 24 + 48 + 9 + 11);
    CHECK(bytes.substr(0, 4) == "LATL");
    CHECK(bytes[4] == 1);
    CHECK(bytes[5] == 0);
    CHECK(bytes[8] == 2);   // V, little-endian
    CHECK(bytes[16] == 3);  // dim
    CHECK(bytes.substr(72, 8) == std::string("\x01\0\0\0\0\0\0\0", 8));
    CHECK(bytes.substr(80, 1) == "a");

    const WordVectors wv = load_word_vectors(dir / "m.bin");
    CHECK(wv.tokens == model.vocab.tokens);
    CHECK(wv.vectors == model.w_in);
}

TEST_CASE("model loader rejects damaged files") {
    testing::TempDir dir("model_bad");
    testing::write_file(dir / "bad.bin", "NOPE");
    CHECK_THROWS_AS(load_word_vectors(dir / "bad.bin"), IoError);
    testing::write_file(dir / "short.bin", std::string("LATL\x01\0\0\0\xff\xff\xff\xff\0\0\0\0\x04\0\0\0\0\0\0\0", 24));
    CHECK_THROWS_AS(load_word_vectors(dir / "short.bin"), IoError);
    CHECK_THROWS_AS(load_word_vectors(dir / "missing.bin"), IoError);
}
