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

#include "translit/rational.h"

#include <string>

#include "translit/errors.h"

namespace translit {

Rational Rational::ParseDecimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  bool in_fraction = false;
  for (char c : text) {
    if (c == '.' && !in_fraction) {
      in_fraction = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw InvalidConfig("not a decimal number: '" + original + "'");
    }
    // 15 significant digits stay far away from int64 overflow.
    if (num > 99'999'999'999'999 || (in_fraction && den > 99'999'999'999'999)) {
      throw InvalidConfig("too many digits: '" + original + "'");
    }
    num = num * 10 + (c - '0');
    if (in_fraction) den *= 10;
    any_digit = true;
  }
  if (!any_digit) throw InvalidConfig("not a decimal number: '" + original + "'");
  return Rational(negative ? -num : num, den);
}

}  // namespace translit
