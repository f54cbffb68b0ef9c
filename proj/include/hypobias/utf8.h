//
// Copyright 2026 The Hypobias Authors
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
//

#ifndef HYPOBIAS_UTF8_H_
#define HYPOBIAS_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace hypobias::utf8 {

// Decodes the code point starting at `*pos` and advances `*pos` past it.
// Returns false on malformed input (overlong forms, surrogates, truncated
// sequences, values above U+10FFFF); `*pos` is then left unchanged.
bool DecodeNext(std::string_view text, std::size_t* pos, char32_t* code_point);

// True iff `text` is well-formed UTF-8.
bool IsValid(std::string_view text);

void AppendCodePoint(char32_t code_point, std::string* out);

// White_Space property of the Unicode character database.
bool IsWhitespace(char32_t code_point);

// Simple lowercase mapping for ASCII and the Latin-1 Supplement. Other code
// points are returned unchanged.
char32_t ToLower(char32_t code_point);

}  // namespace hypobias::utf8

#endif  // HYPOBIAS_UTF8_H_
