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

#include "hypobias/tokenizer.h"

#include "hypobias/utf8.h"

namespace hypobias {
namespace {

bool IsStripped(char c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ';':
    case ':':
    case '"':
    case '\'':
    case '(':
    case ')':
      return true;
    default:
      return false;
  }
}

std::string_view StripPunctuation(std::string_view piece) {
  while (!piece.empty() && IsStripped(piece.front())) piece.remove_prefix(1);
  while (!piece.empty() && IsStripped(piece.back())) piece.remove_suffix(1);
  return piece;
}

// Calls `emit(piece)` for every stripped, non-empty piece of the lowercased
// text.
template <typename Emit>
void ForEachToken(std::string_view text, Emit emit) {
  std::string piece;
  auto flush = [&] {
    std::string_view stripped = StripPunctuation(piece);
    if (!stripped.empty()) emit(stripped);
    piece.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const std::size_t start = pos;
    if (!utf8::DecodeNext(text, &pos, &cp)) {
      piece.push_back(text[start]);
      pos = start + 1;
      continue;
    }
    if (utf8::IsWhitespace(cp)) {
      flush();
    } else {
      utf8::AppendCodePoint(utf8::ToLower(cp), &piece);
    }
  }
  flush();
}

}  // namespace

TokenSeq Tokenize(std::string_view text) {
  TokenSeq tokens;
  ForEachToken(text,
               [&](std::string_view token) { tokens.emplace_back(token); });
  return tokens;
}

std::size_t CountTokens(std::string_view text) {
  std::size_t n = 0;
  ForEachToken(text, [&](std::string_view) { ++n; });
  return n;
}

}  // namespace hypobias
