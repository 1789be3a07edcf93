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

#ifndef LINGUA_ATLAS_CORPUS_HPP
#define LINGUA_ATLAS_CORPUS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lingua_atlas {

/// Three-way script taxonomy: one symbol per morpheme, per syllable, or
/// per phoneme. Abjads and abugidas are treated as alphabetic.
enum class WritingSystem { logographic, syllabic, alphabetic };

const char* to_string(WritingSystem ws) noexcept;

struct LanguageDoc {
    std::string label;
    std::string raw_text;
    WritingSystem writing_system = WritingSystem::alphabetic;

    friend bool operator==(const LanguageDoc&, const LanguageDoc&) = default;
};

/// Tokens are nonempty and never contain whitespace.
struct Sentence {
    std::vector<std::string> tokens;
    std::string label;

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Corpus {
    std::vector<LanguageDoc> docs;
    std::vector<Sentence> sentences;

    /// Labels in document order.
    std::vector<std::string> labels() const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct CorpusOptions {
    // Each input line is one sentence; terminator punctuation does not split.
    bool line_per_sentence = false;
};

/// Majority vote over letter codepoints. CJK ideographs vote logographic,
/// kana and Hangul syllables vote syllabic, every other letter votes
/// alphabetic. Ties prefer logographic, then syllabic.
/// Throws CorpusError("unclassifiable text") when no letter is present.
WritingSystem classify_writing_system(std::string_view text);

/// Splits on . ! ? 。 ！ ？ । ؟ and newlines. Segments are trimmed and
/// empty ones dropped.
std::vector<std::string> split_sentences(const LanguageDoc& doc);
std::vector<std::string> split_sentences(std::string_view text);

/// Removes every codepoint in general categories P* and S*.
std::string strip_punctuation(std::string_view sentence);

/// Alphabetic text splits on whitespace runs and is case folded; the other
/// classes produce one token per non-whitespace codepoint.
std::vector<std::string> tokenize(std::string_view sentence, WritingSystem ws);

/// Full classify, split, strip, tokenize pass over one document.
/// Sentences with no tokens after stripping are dropped.
std::vector<Sentence> process_document(const LanguageDoc& doc, const CorpusOptions& options = {});

/// The `.txt` files of a corpus directory in lexicographic filename order.
std::vector<std::filesystem::path> list_corpus_files(const std::filesystem::path& directory);

/// Loads every `.txt` file in `directory` in lexicographic filename order,
/// labelling each by its filename stem.
Corpus load_corpus(const std::filesystem::path& directory, const CorpusOptions& options = {});

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_CORPUS_HPP
