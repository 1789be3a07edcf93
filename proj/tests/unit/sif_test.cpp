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

#include "lingua_atlas/sif.hpp"

#include <cmath>

#include "doctest.h"
#include "lingua_atlas/error.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace lingua_atlas;

namespace {

Matrix from_rows(std::initializer_list<std::vector<double>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
        ++r;
    }
    return m;
}

EmbeddingModel tiny_model(const std::vector<Sentence>& corpus, std::size_t dim) {
    Word2VecParams p;
    p.dim = dim;
    p.epochs = 3;
    return train_word2vec(corpus, p);
}

}  // namespace

TEST_CASE("first_principal_component hand cases") {
    const auto pc = first_principal_component(from_rows({{2, 0}, {-2, 0}, {0, 1}, {0, -1}}));
    CHECK(pc[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(pc[1]) < 1e-9);

    // Rank one: every row a multiple of u = (3, -4, 0).
    const auto u = first_principal_component(from_rows({{3, -4, 0}, {-6, 8, 0}, {1.5, -2, 0}}));
    CHECK(u[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(u[1] == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(u[2] == 0.0);

    // Sign rule: first nonzero entry positive.
    const auto s = first_principal_component(from_rows({{0, -1, 0.5}, {0, -2, 1}}));
    CHECK(s[0] == 0.0);
    CHECK(s[1] > 0.0);
}

TEST_CASE("first_principal_component is unit length on random input") {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m(2 + rng.below(30), 1 + rng.below(12));
        for (double& v : m.data()) v = rng.uniform(-1.0, 1.0);
        const auto pc = first_principal_component(m);
        CHECK(std::abs(norm2(pc) - 1.0) < 1e-12);
    }
}

TEST_CASE("first_principal_component rejects an all-zero matrix") {
    CHECK_THROWS_AS(first_principal_component(Matrix(3, 2)), EmbeddingError);
}

TEST_CASE("SIF weights are uniform when tokens are equally frequent") {
    const std::vector<Sentence> corpus = {{{"a", "b", "c"}, "l"}, {{"c", "b", "a"}, "l"}};
    const auto model = tiny_model(corpus, 4);
    const auto avg = sif_weighted_average(corpus, model, SifParams{});
    const double w = 1e-3 / (1e-3 + 1.0 / 3.0);
    for (std::size_t d = 0; d < 4; ++d) {
        double mean = 0.0;
        for (const char* t : {"a", "b", "c"}) mean += model.vector(*model.vocab.find(t))[d];
        mean /= 3.0;
        CHECK(avg.rows(0, d) == doctest::Approx(w * mean).epsilon(1e-12));
    }
}

TEST_CASE("SIF rows for empty or OOV sentences are zero") {
    const std::vector<Sentence> train = {{{"a", "b"}, "l"}, {{"b", "c"}, "l"}, {{"c", "a", "d"}, "l"}};
    const auto model = tiny_model(train, 5);
    std::vector<Sentence> input = train;
    input.push_back({{}, "l"});
    input.push_back({{"zzz"}, "l"});
    const auto out = sif_sentence_embed(input, model, SifParams{});
    CHECK(norm2(out.rows.row(3)) == 0.0);
    CHECK(norm2(out.rows.row(4)) == 0.0);
    CHECK(out.kind == EmbeddingKind::w2v_sif);

    CHECK_THROWS_AS(sif_sentence_embed(std::vector<Sentence>{{{"zzz"}, "l"}}, model, SifParams{}), EmbeddingError);
    CHECK_THROWS_AS(sif_weighted_average(input, model, SifParams{0.0}), EmbeddingError);
}

TEST_CASE("SIF output is orthogonal to the removed component") {
    const auto corpus = testing::cooccurrence_corpus(200, 8);
    Word2VecParams p;
    p.dim = 16;
    const auto model = train_word2vec(corpus, p);
    const auto before = sif_weighted_average(corpus, model, SifParams{});
    const auto oracle_pc = testing::oracle_top_eigenvector(before.rows);

    const auto after = sif_sentence_embed(corpus, model, SifParams{});
    for (std::size_t r = 0; r < after.rows.rows(); ++r) {
        CHECK(std::abs(dot(after.rows.row(r), oracle_pc)) < 1e-6);
    }
}
