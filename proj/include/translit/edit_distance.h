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

#ifndef TRANSLIT_EDIT_DISTANCE_H_
#define TRANSLIT_EDIT_DISTANCE_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace translit {

// Minimum number of unit-cost insert, delete and substitute operations.
struct EditDistance {
  std::size_t value = 0;

  friend constexpr auto operator<=>(const EditDistance&,
                                    const EditDistance&) = default;
};

// Levenshtein distance over the code points of two UTF-8 strings.
EditDistance Levenshtein(std::string_view a, std::string_view b);

// Exact distance when it is at most `bound`, otherwise nullopt. Only the
// diagonal band of half-width `bound` is evaluated, and the scan stops as
// soon as a whole row exceeds the bound.
std::optional<EditDistance> LevenshteinBounded(std::string_view a,
                                               std::string_view b,
                                               std::size_t bound);

namespace internal {

template <typename C>
constexpr char32_t AsCodePoint(C c) {
  if constexpr (sizeof(C) == 1) {
    return static_cast<char32_t>(static_cast<unsigned char>(c));
  } else {
    return static_cast<char32_t>(c);
  }
}

// Two rolling rows; `a` indexes rows, `b` columns.
template <typename CA, typename CB>
std::size_t FullDistance(std::basic_string_view<CA> a,
                         std::basic_string_view<CB> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    const char32_t ca = AsCodePoint(a[i - 1]);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (ca == AsCodePoint(b[j - 1]) ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

template <typename CA, typename CB>
std::optional<std::size_t> BandedDistance(std::basic_string_view<CA> a,
                                          std::basic_string_view<CB> b,
                                          std::size_t bound) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t diff = n > m ? n - m : m - n;
  if (diff > bound) return std::nullopt;
  // The distance never exceeds the longer length; clamping keeps `inf` finite.
  const std::size_t k = std::min(bound, std::max(n, m));
  if (n == 0 || m == 0) return diff;

  const std::size_t inf = k + 1;
  std::vector<std::size_t> prev(m + 1, inf);
  std::vector<std::size_t> cur(m + 1, inf);
  for (std::size_t j = 0; j <= std::min(m, k); ++j) prev[j] = j;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > k ? i - k : 0;
    const std::size_t hi = std::min(m, i + k);
    std::size_t row_min = inf;
    std::size_t start = lo;
    if (lo == 0) {
      cur[0] = i;
      row_min = i;
      start = 1;
    } else {
      cur[lo - 1] = inf;
    }
    const char32_t ca = AsCodePoint(a[i - 1]);
    for (std::size_t j = start; j <= hi; ++j) {
      const std::size_t sub = prev[j - 1] + (ca == AsCodePoint(b[j - 1]) ? 0 : 1);
      const std::size_t v = std::min({sub, prev[j] + 1, cur[j - 1] + 1, inf});
      cur[j] = v;
      row_min = std::min(row_min, v);
    }
    if (hi < m) cur[hi + 1] = inf;
    if (row_min > k) return std::nullopt;
    std::swap(prev, cur);
  }
  if (prev[m] > k) return std::nullopt;
  return prev[m];
}

}  // namespace internal
}  // namespace translit

#endif  // TRANSLIT_EDIT_DISTANCE_H_
