// Copyright 2026 The docloom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace docloom::util {

// Decodes UTF-8 into codepoints. Invalid bytes decode to U+FFFD, one
// replacement per bad byte, so the glyph count stays stable.
std::vector<char32_t> decode_utf8(std::string_view text);

// Wide East-Asian codepoints (Han, kana, hangul, fullwidth forms).
bool is_cjk(char32_t cp);

bool is_ascii_letter(char32_t cp);

// JSON string escaping per RFC 8259: quote, backslash, and control
// characters; everything else passes through as raw UTF-8.
std::string json_escape(std::string_view text);

// Escapes &, <, >, " and ' for XML attribute/text content.
std::string xml_escape(std::string_view text);

std::string_view strip(std::string_view s);
std::string_view rstrip(std::string_view s);

// Splits on '\n', dropping a trailing '\r' from each line (CRLF input).
std::vector<std::string_view> split_lines(std::string_view text);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace docloom::util
