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

#ifndef LINGUA_ATLAS_ERROR_HPP
#define LINGUA_ATLAS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lingua_atlas {

/// Pipeline stage an error originated from. The numeric value is the
/// process exit code reported by the command-line tool.
enum class Stage : int {
    config = 1,
    corpus = 2,
    embedding = 3,
    projection = 4,
    io = 5,
};

const char* stage_name(Stage stage) noexcept;

class Error : public std::runtime_error {
public:
    Error(Stage stage, const std::string& what) : std::runtime_error(what), stage_(stage) {}

    Stage stage() const noexcept { return stage_; }
    int exit_code() const noexcept { return static_cast<int>(stage_); }

private:
    Stage stage_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(Stage::config, what) {}
};
struct CorpusError : Error {
    explicit CorpusError(const std::string& what) : Error(Stage::corpus, what) {}
};
struct EmbeddingError : Error {
    explicit EmbeddingError(const std::string& what) : Error(Stage::embedding, what) {}
};
// Raised by the projection and the cluster metrics computed on it.
struct ProjectionError : Error {
    explicit ProjectionError(const std::string& what) : Error(Stage::projection, what) {}
};
struct IoError : Error {
    explicit IoError(const std::string& what) : Error(Stage::io, what) {}
};

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_ERROR_HPP
