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

// Small string helpers shared by the loaders and writers.

#ifndef HYPOBIAS_STRING_UTIL_H_
#define HYPOBIAS_STRING_UTIL_H_

#include <cstddef>
#include <functional>
#include <iterator>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fmt/format.h"

namespace hypobias {

std::string_view StripAsciiWhitespace(std::string_view text);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// Splits on every occurrence of `delimiter`; "" yields one empty piece.
std::vector<std::string_view> Split(std::string_view text, char delimiter);

// Transparent hash so unordered containers keyed by std::string accept
// std::string_view lookups.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

template <typename V>
using StringMap =
    std::unordered_map<std::string, V, StringHash, std::equal_to<>>;
using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

// Appends the default fmt rendering of every argument.
template <typename... Args>
void StrAppend(std::string* out, const Args&... args) {
  (fmt::format_to(std::back_inserter(*out), "{}", args), ...);
}

template <typename... Args>
std::string StrCat(const Args&... args) {
  std::string out;
  StrAppend(&out, args...);
  return out;
}

// 1234567 -> "1,234,567".
std::string WithThousands(std::size_t value);

}  // namespace hypobias

#endif  // HYPOBIAS_STRING_UTIL_H_
