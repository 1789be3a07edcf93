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

#include "unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace lingua_atlas::unicode {

std::optional<std::u32string> decode(std::string_view utf8) {
    std::u32string out;
    out.reserve(utf8.size());
    const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
    const auto length = static_cast<int32_t>(utf8.size());
    int32_t i = 0;
    while (i < length) {
        UChar32 c;
        U8_NEXT(s, i, length, c);
        if (c < 0) {
            return std::nullopt;
        }
        out.push_back(static_cast<char32_t>(c));
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
    if (!error) {
        out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
    }
}

std::string encode(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        append_utf8(out, cp);
    }
    return out;
}

bool is_valid_utf8(std::string_view utf8) { return decode(utf8).has_value(); }

bool is_letter(char32_t cp) {
    return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_L_MASK) != 0;
}

bool is_punct_or_symbol(char32_t cp) {
    return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & (U_GC_P_MASK | U_GC_S_MASK)) != 0;
}

bool is_whitespace(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

char32_t fold_case(char32_t cp) {
    return static_cast<char32_t>(u_foldCase(static_cast<UChar32>(cp), U_FOLD_CASE_DEFAULT));
}

bool is_cjk_ideograph(char32_t cp) {
    switch (ublock_getCode(static_cast<UChar32>(cp))) {
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS:
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS_EXTENSION_A:
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS_EXTENSION_B:
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS_EXTENSION_C:
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS_EXTENSION_D:
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS_EXTENSION_E:
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS_EXTENSION_F:
        case UBLOCK_CJK_UNIFIED_IDEOGRAPHS_EXTENSION_G:
            return true;
        default:
            return false;
    }
}

bool is_syllabary(char32_t cp) {
    switch (ublock_getCode(static_cast<UChar32>(cp))) {
        case UBLOCK_HIRAGANA:
        case UBLOCK_KATAKANA:
        case UBLOCK_KATAKANA_PHONETIC_EXTENSIONS:
        case UBLOCK_HANGUL_SYLLABLES:
            return true;
        default:
            return false;
    }
}

}  // namespace lingua_atlas::unicode
