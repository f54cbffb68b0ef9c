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

#ifndef HYPOBIAS_TOKENIZER_H_
#define HYPOBIAS_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace hypobias {

// Tokens are non-empty and contain no whitespace.
using TokenSeq = std::vector<std::string>;

// Lowercases, splits on Unicode whitespace, then strips the characters
// . , ! ? ; : " ' ( ) from both ends of every piece. Pieces left empty are
// dropped. Input is expected to be valid UTF-8; malformed bytes are passed
// through untouched.
TokenSeq Tokenize(std::string_view text);

// Number of tokens Tokenize() would produce, without materializing them.
std::size_t CountTokens(std::string_view text);

}  // namespace hypobias

#endif  // HYPOBIAS_TOKENIZER_H_
