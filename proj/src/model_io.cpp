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

#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "lingua_atlas/error.hpp"
#include "lingua_atlas/word2vec.hpp"

namespace lingua_atlas {

namespace {

constexpr std::array<char, 4> kMagic = {'L', 'A', 'T', 'L'};

template <typename T>
void put_le(std::ostream& out, T value) {
    std::uint64_t bits = 0;
    if constexpr (std::is_floating_point_v<T>) {
        bits = std::bit_cast<std::uint64_t>(value);
    } else {
        bits = static_cast<std::uint64_t>(value);
    }
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out.put(static_cast<char>((bits >> (8 * i)) & 0xFF));
    }
}

template <typename T>
T get_le(std::istream& in) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) throw IoError("truncated model file");
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    if constexpr (std::is_floating_point_v<T>) {
        return std::bit_cast<T>(bits);
    } else {
        return static_cast<T>(bits);
    }
}

}  // namespace

void save_model(const EmbeddingModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kModelFormatVersion);
    put_le<std::uint64_t>(out, model.vocab.size());
    put_le<std::uint64_t>(out, model.dim());
    for (double v : model.w_in.data()) put_le<double>(out, v);
    for (const auto& t : model.vocab.tokens) {
        put_le<std::uint64_t>(out, t.size());
        out.write(t.data(), static_cast<std::streamsize>(t.size()));
    }
    if (!out) throw IoError("failed writing " + path.string());
}

WordVectors load_word_vectors(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw IoError("not a model file: " + path.string());
    const auto version = get_le<std::uint32_t>(in);
    if (version != kModelFormatVersion) {
        throw IoError("unsupported model version " + std::to_string(version));
    }
    const auto vocab_size = get_le<std::uint64_t>(in);
    const auto dim = get_le<std::uint64_t>(in);
    // Reject headers that could not possibly fit in the file.
    const auto here = in.tellg();
    in.seekg(0, std::ios::end);
    const auto remaining = static_cast<std::uint64_t>(in.tellg() - here);
    in.seekg(here);
    if (dim != 0 && vocab_size > remaining / 8 / dim) throw IoError("truncated model file");

    WordVectors wv;
    wv.vectors = Matrix(vocab_size, dim);
    for (double& v : wv.vectors.data()) v = get_le<double>(in);
    wv.tokens.reserve(vocab_size);
    for (std::uint64_t i = 0; i < vocab_size; ++i) {
        const auto len = get_le<std::uint64_t>(in);
        if (len > remaining) throw IoError("corrupt token table");
        std::string t(len, '\0');
        in.read(t.data(), static_cast<std::streamsize>(len));
        if (!in) throw IoError("truncated model file");
        wv.tokens.push_back(std::move(t));
    }
    return wv;
}

}  // namespace lingua_atlas
