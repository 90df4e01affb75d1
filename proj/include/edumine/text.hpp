// Copyright 2026 The edumine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace edumine::text {

/// Decodes UTF-8. Invalid or truncated sequences decode to U+FFFD, one per
/// offending byte.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

/// Simple (1:1, locale-free) lowercase mapping of one code point.
char32_t to_lower(char32_t cp);

bool is_whitespace(char32_t cp);  // Unicode White_Space
bool is_letter(char32_t cp);      // general category L*
bool is_punct(char32_t cp);       // general category P* or S*

/// Splits on Unicode whitespace, dropping empty pieces.
std::vector<std::string> split_whitespace(std::string_view s);

}  // namespace edumine::text
