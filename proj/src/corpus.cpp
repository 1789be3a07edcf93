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

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include "lingua_atlas/error.hpp"
#include "unicode.hpp"

namespace lingua_atlas {

namespace fs = std::filesystem;

namespace {

constexpr std::array<char32_t, 8> kTerminators = {
    U'.', U'!', U'?', U'。', U'！', U'？', U'।', U'؟',
};

bool is_terminator(char32_t cp) {
    return std::find(kTerminators.begin(), kTerminators.end(), cp) != kTerminators.end();
}

std::u32string_view trim(std::u32string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && unicode::is_whitespace(s[b])) ++b;
    while (e > b && unicode::is_whitespace(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::u32string decode_or_throw(std::string_view text) {
    auto cps = unicode::decode(text);
    if (!cps) {
        throw CorpusError("invalid UTF-8");
    }
    return std::move(*cps);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CorpusError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

const char* to_string(WritingSystem ws) noexcept {
    switch (ws) {
        case WritingSystem::logographic: return "logographic";
        case WritingSystem::syllabic: return "syllabic";
        case WritingSystem::alphabetic: return "alphabetic";
    }
    return "unknown";
}

std::vector<std::string> Corpus::labels() const {
    std::vector<std::string> out;
    out.reserve(docs.size());
    for (const auto& d : docs) out.push_back(d.label);
    return out;
}

WritingSystem classify_writing_system(std::string_view text) {
    const std::u32string cps = decode_or_throw(text);
    std::size_t logo = 0, syll = 0, alpha = 0;
    for (char32_t cp : cps) {
        if (!unicode::is_letter(cp)) continue;
        if (unicode::is_cjk_ideograph(cp)) {
            ++logo;
        } else if (unicode::is_syllabary(cp)) {
            ++syll;
        } else {
            ++alpha;
        }
    }
    if (logo + syll + alpha == 0) {
        throw CorpusError("unclassifiable text");
    }
    if (logo >= syll && logo >= alpha) return WritingSystem::logographic;
    if (syll >= alpha) return WritingSystem::syllabic;
    return WritingSystem::alphabetic;
}

std::vector<std::string> split_sentences(std::string_view text) {
    const std::u32string cps = decode_or_throw(text);
    std::vector<std::string> out;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto seg = trim(std::u32string_view(cps).substr(start, end - start));
        if (!seg.empty()) out.push_back(unicode::encode(seg));
    };
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (is_terminator(cps[i]) || cps[i] == U'\n') {
            flush(i);
            start = i + 1;
        }
    }
    flush(cps.size());
    return out;
}

std::vector<std::string> split_sentences(const LanguageDoc& doc) { return split_sentences(doc.raw_text); }

std::string strip_punctuation(std::string_view sentence) {
    const std::u32string cps = decode_or_throw(sentence);
    std::string out;
    out.reserve(sentence.size());
    for (char32_t cp : cps) {
        if (!unicode::is_punct_or_symbol(cp)) unicode::append_utf8(out, cp);
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view sentence, WritingSystem ws) {
    const std::u32string cps = decode_or_throw(sentence);
    std::vector<std::string> tokens;
    if (ws == WritingSystem::alphabetic) {
        std::string current;
        for (char32_t cp : cps) {
            if (unicode::is_whitespace(cp)) {
                if (!current.empty()) tokens.push_back(std::move(current));
                current.clear();
            } else {
                unicode::append_utf8(current, unicode::fold_case(cp));
            }
        }
        if (!current.empty()) tokens.push_back(std::move(current));
    } else {
        for (char32_t cp : cps) {
            if (unicode::is_whitespace(cp)) continue;
            std::string t;
            unicode::append_utf8(t, cp);
            tokens.push_back(std::move(t));
        }
    }
    return tokens;
}

std::vector<Sentence> process_document(const LanguageDoc& doc, const CorpusOptions& options) {
    std::vector<std::string> raw;
    if (options.line_per_sentence) {
        std::istringstream lines(doc.raw_text);
        for (std::string line; std::getline(lines, line);) {
            raw.push_back(std::move(line));
        }
    } else {
        raw = split_sentences(doc);
    }
    std::vector<Sentence> out;
    for (const auto& s : raw) {
        auto tokens = tokenize(strip_punctuation(s), doc.writing_system);
        if (!tokens.empty()) out.push_back(Sentence{std::move(tokens), doc.label});
    }
    return out;
}

std::vector<fs::path> list_corpus_files(const fs::path& directory) {
    std::error_code ec;
    if (!fs::is_directory(directory, ec)) {
        throw CorpusError("corpus directory not found: " + directory.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
    return files;
}

Corpus load_corpus(const fs::path& directory, const CorpusOptions& options) {
    const std::vector<fs::path> files = list_corpus_files(directory);
    Corpus corpus;
    for (const auto& path : files) {
        LanguageDoc doc;
        doc.label = path.stem().string();
        doc.raw_text = read_file(path);
        if (doc.raw_text.starts_with("\xEF\xBB\xBF")) doc.raw_text.erase(0, 3);
        if (doc.label.empty()) {
            throw CorpusError("empty language label for " + path.string());
        }
        if (!unicode::is_valid_utf8(doc.raw_text)) {
            throw CorpusError("invalid UTF-8 in " + path.filename().string());
        }
        std::vector<Sentence> sentences;
        try {
            doc.writing_system = classify_writing_system(doc.raw_text);
            sentences = process_document(doc, options);
        } catch (const CorpusError& e) {
            if (doc.raw_text.find_first_not_of(" \t\r\n") == std::string::npos) {
                throw CorpusError("zero sentences: " + doc.label);
            }
            throw CorpusError(std::string(e.what()) + ": " + doc.label);
        }
        if (sentences.empty()) {
            throw CorpusError("zero sentences: " + doc.label);
        }
        corpus.docs.push_back(std::move(doc));
        std::move(sentences.begin(), sentences.end(), std::back_inserter(corpus.sentences));
    }
    if (corpus.docs.size() < 2) {
        throw CorpusError("fewer than 2 languages in " + directory.string());
    }
    return corpus;
}

}  // namespace lingua_atlas
