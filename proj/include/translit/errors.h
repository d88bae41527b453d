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

#ifndef TRANSLIT_ERRORS_H_
#define TRANSLIT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace translit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rule 1 violations and other caller-side contract breaches.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("empty corpus: no term survived tokenization") {}
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class EmptyGoldSet : public Error {
 public:
  EmptyGoldSet() : Error("empty gold set") {}
};

class GoldTermMissing : public Error {
 public:
  explicit GoldTermMissing(std::vector<std::string> terms)
      : Error(Describe(terms)), terms_(std::move(terms)) {}

  const std::vector<std::string>& terms() const { return terms_; }

 private:
  static std::string Describe(const std::vector<std::string>& terms) {
    std::string msg = "gold term(s) missing from vocabulary:";
    for (const auto& t : terms) {
      msg += ' ';
      msg += t;
    }
    return msg;
  }

  std::vector<std::string> terms_;
};

}  // namespace translit

#endif  // TRANSLIT_ERRORS_H_
