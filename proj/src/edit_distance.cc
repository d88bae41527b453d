// Copyright 2026 The translit-norm Authors.
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

#include "translit/edit_distance.h"

#include <string>

#include "translit/utf8.h"

namespace translit {

EditDistance Levenshtein(std::string_view a, std::string_view b) {
  if (IsAscii(a) && IsAscii(b)) {
    return {internal::FullDistance(a, b)};
  }
  const std::u32string wa = DecodeUtf8(a);
  const std::u32string wb = DecodeUtf8(b);
  return {internal::FullDistance(std::u32string_view(wa),
                                 std::u32string_view(wb))};
}

std::optional<EditDistance> LevenshteinBounded(std::string_view a,
                                               std::string_view b,
                                               std::size_t bound) {
  std::optional<std::size_t> d;
  if (IsAscii(a) && IsAscii(b)) {
    d = internal::BandedDistance(a, b, bound);
  } else {
    const std::u32string wa = DecodeUtf8(a);
    const std::u32string wb = DecodeUtf8(b);
    d = internal::BandedDistance(std::u32string_view(wa),
                                 std::u32string_view(wb), bound);
  }
  if (!d) return std::nullopt;
  return EditDistance{*d};
}

}  // namespace translit
