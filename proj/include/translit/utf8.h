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

#ifndef TRANSLIT_UTF8_H_
#define TRANSLIT_UTF8_H_

#include <string>
#include <string_view>

namespace translit {

bool IsAscii(std::string_view text);

// Decodes UTF-8 into code points. Malformed bytes are mapped one-to-one onto
// the lone-surrogate range U+DC80..U+DCFF so that no input is ever rejected
// and distinct malformed bytes stay distinct.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);

// Number of code points in `text`.
std::size_t CodePointLength(std::string_view text);

}  // namespace translit

#endif  // TRANSLIT_UTF8_H_
