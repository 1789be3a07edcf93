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

#include "lingua_atlas/corpus.hpp"

#include "doctest.h"
#include "lingua_atlas/error.hpp"
#include "support/synthetic.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

using namespace lingua_atlas;
using lingua_atlas::testing::TempDir;
using lingua_atlas::testing::write_file;

namespace {

bool has_punct_codepoint(const std::string& s) {
    const auto* p = reinterpret_cast<const uint8_t*>(s.data());
    int32_t i = 0;
    const auto n = static_cast<int32_t>(s.size());
    while (i < n) {
        UChar32 c;
        U8_NEXT(p, i, n, c);
        if (U_GET_GC_MASK(c) & U_GC_P_MASK) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("classify_writing_system by majority of letters") {
    CHECK(classify_writing_system("你好世界") == WritingSystem::logographic);
    CHECK(classify_writing_system("hello world") == WritingSystem::alphabetic);
    CHECK(classify_writing_system("こんにちは") == WritingSystem::syllabic);
    CHECK(classify_writing_system("안녕하세요") == WritingSystem::syllabic);
    CHECK(classify_writing_system("שלום עולם") == WritingSystem::alphabetic);
    CHECK(classify_writing_system("नमस्ते दुनिया") == WritingSystem::alphabetic);
    CHECK(classify_writing_system("வணக்கம்") == WritingSystem::alphabetic);
    // Kanji outnumber kana.
    CHECK(classify_writing_system("日本語の文") == WritingSystem::logographic);
}

TEST_CASE("classify_writing_system ties prefer logographic then syllabic") {
    CHECK(classify_writing_system("你a") == WritingSystem::logographic);
    CHECK(classify_writing_system("あa") == WritingSystem::syllabic);
    CHECK(classify_writing_system("你あ") == WritingSystem::logographic);
}

TEST_CASE("classify_writing_system rejects text without letters") {
    CHECK_THROWS_WITH_AS(classify_writing_system("123 !?"), "unclassifiable text", CorpusError);
    CHECK_THROWS_AS(classify_writing_system(""), CorpusError);
}

TEST_CASE("classification ignores appended punctuation and whitespace") {
    for (const std::string text : {"hello", "你好世界", "こんにちは", "a你"}) {
        const auto base = classify_writing_system(text);
        CHECK(classify_writing_system(text + "!!! ,,") == base);
        CHECK(classify_writing_system(text + "  \n\t") == base);
        CHECK(classify_writing_system(text + "。«»") == base);
    }
}

TEST_CASE("split_sentences") {
    using V = std::vector<std::string>;
    CHECK(split_sentences(std::string_view("A b. C d!")) == V{"A b", "C d"});
    CHECK(split_sentences(std::string_view("你好。再见。")) == V{"你好", "再见"});
    CHECK(split_sentences(std::string_view("")).empty());
    CHECK(split_sentences(std::string_view("why? no！ yes？ ok।  fine؟")) == V{"why", "no", "yes", "ok", "fine"});
    CHECK(split_sentences(std::string_view("line one\nline two\n\n   \n")) == V{"line one", "line two"});
    CHECK(split_sentences(std::string_view("...!!")).empty());
}

TEST_CASE("strip_punctuation removes P and S categories only") {
    CHECK(strip_punctuation("don't, stop!") == "dont stop");
    CHECK(strip_punctuation("abc") == "abc");
    CHECK(strip_punctuation("«quoted»") == "quoted");
    CHECK(strip_punctuation("a+b=c $5") == "abc 5");
    // Combining marks stay (Devanagari virama, Tamil vowel sign).
    CHECK(strip_punctuation("नमस्ते।") == "नमस्ते");
    CHECK(strip_punctuation("the and of") == "the and of");
}

TEST_CASE("tokenize by writing system") {
    using V = std::vector<std::string>;
    CHECK(tokenize("Hello World", WritingSystem::alphabetic) == V{"hello", "world"});
    CHECK(tokenize("你好", WritingSystem::logographic) == V{"你", "好"});
    CHECK(tokenize("", WritingSystem::alphabetic).empty());
    CHECK(tokenize("  spaced\t out  ", WritingSystem::alphabetic) == V{"spaced", "out"});
    CHECK(tokenize("ΣΟΦΙΑ", WritingSystem::alphabetic) == V{"σοφια"});
    CHECK(tokenize("こん にちは", WritingSystem::syllabic) == V{"こ", "ん", "に", "ち", "は"});
    CHECK(tokenize("שלום", WritingSystem::alphabetic) == V{"שלום"});
}

TEST_CASE("tokens after stripping carry no punctuation") {
    const std::vector<std::pair<std::string, WritingSystem>> samples = {
        {"Hello, (world)! «x» \u2014 y\u2026", WritingSystem::alphabetic},
        {"你好，世界！「引用」", WritingSystem::logographic},
        {"こんにちは、世界。", WritingSystem::syllabic},
        {"مرحبا، يا عالم؟", WritingSystem::alphabetic},
    };
    for (const auto& [text, ws] : samples) {
        for (const auto& tok : tokenize(strip_punctuation(text), ws)) {
            CHECK_FALSE(tok.empty());
            CHECK_FALSE(has_punct_codepoint(tok));
            CHECK(tok.find(' ') == std::string::npos);
        }
    }
}

TEST_CASE("alphabetic re-tokenization is idempotent") {
    const auto tokens = tokenize("The Quick  brown FOX jumps ÜBER", WritingSystem::alphabetic);
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    CHECK(tokenize(joined, WritingSystem::alphabetic) == tokens);
}

TEST_CASE("load_corpus reads files in lexicographic order") {
    TempDir dir("corpus");
    write_file(dir / "la.txt", "Arma virumque cano. Troiae qui primus!");
    write_file(dir / "en.txt", "I sing of arms. And the man!");
    write_file(dir / "notes.md", "ignored");
    const Corpus corpus = load_corpus(dir.path());
    CHECK(corpus.labels() == std::vector<std::string>{"en", "la"});
    REQUIRE(corpus.sentences.size() == 4);
    CHECK(corpus.sentences[0].label == "en");
    CHECK(corpus.sentences[0].tokens == std::vector<std::string>{"i", "sing", "of", "arms"});
    CHECK(corpus.sentences[3].label == "la");
    CHECK(corpus.docs[0].writing_system == WritingSystem::alphabetic);
}

TEST_CASE("load_corpus is deterministic") {
    TempDir dir("corpus_det");
    write_file(dir / "zh.txt", "你好。再见。");
    write_file(dir / "ja.txt", "こんにちは。さようなら。");
    write_file(dir / "en.txt", "Hello there. Goodbye now.");
    CHECK(load_corpus(dir.path()) == load_corpus(dir.path()));
}

TEST_CASE("load_corpus line-per-sentence mode") {
    TempDir dir("corpus_lines");
    write_file(dir / "a.txt", "one. two\nthree\n");
    write_file(dir / "b.txt", "x\ny\n");
    const Corpus split = load_corpus(dir.path());
    const Corpus lines = load_corpus(dir.path(), CorpusOptions{true});
    CHECK(split.sentences.size() == 5);
    CHECK(lines.sentences.size() == 4);
    CHECK(lines.sentences[0].tokens == std::vector<std::string>{"one", "two"});
}

TEST_CASE("load_corpus error paths") {
    SUBCASE("missing directory") {
        CHECK_THROWS_AS(load_corpus("/nonexistent/lingua_atlas_dir"), CorpusError);
    }
    SUBCASE("empty directory") {
        TempDir dir("corpus_empty");
        CHECK_THROWS_WITH_AS(load_corpus(dir.path()), doctest::Contains("fewer than 2 languages"), CorpusError);
    }
    SUBCASE("single language") {
        TempDir dir("corpus_one");
        write_file(dir / "en.txt", "Hello.");
        CHECK_THROWS_WITH_AS(load_corpus(dir.path()), doctest::Contains("fewer than 2 languages"), CorpusError);
    }
    SUBCASE("empty file") {
        TempDir dir("corpus_zero");
        write_file(dir / "en.txt", "");
        CHECK_THROWS_WITH_AS(load_corpus(dir.path()), "zero sentences: en", CorpusError);
    }
    SUBCASE("invalid utf8 names the file") {
        TempDir dir("corpus_utf8");
        write_file(dir / "en.txt", "Hello.");
        write_file(dir / "xx.txt", std::string("bad \xC3\x28 bytes"));
        CHECK_THROWS_WITH_AS(load_corpus(dir.path()), doctest::Contains("xx.txt"), CorpusError);
    }
}
