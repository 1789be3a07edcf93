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

#ifndef LINGUA_ATLAS_UNICODE_HPP
#define LINGUA_ATLAS_UNICODE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lingua_atlas::unicode {

// Decodes UTF-8 into codepoints; nullopt on any malformed sequence.
std::optional<std::u32string> decode(std::string_view utf8);

void append_utf8(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

bool is_valid_utf8(std::string_view utf8);

bool is_letter(char32_t cp);
// General category P* or S*.
bool is_punct_or_symbol(char32_t cp);
bool is_whitespace(char32_t cp);
// Simple (single codepoint) case folding.
char32_t fold_case(char32_t cp);

bool is_cjk_ideograph(char32_t cp);
bool is_syllabary(char32_t cp);

}  // namespace lingua_atlas::unicode

#endif  // LINGUA_ATLAS_UNICODE_HPP
