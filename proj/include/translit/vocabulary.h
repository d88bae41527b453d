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

#ifndef TRANSLIT_VOCABULARY_H_
#define TRANSLIT_VOCABULARY_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace translit {

inline constexpr std::size_t kMinTermLength = 2;

// Maximal runs of ASCII letters of length >= 2, lowercased when `case_fold`.
// Everything else, including ITRANS markers such as . ~ ^ |, separates.
std::vector<std::string> Tokenize(std::string_view text, bool case_fold);

std::string FoldCase(std::string_view term);

struct VocabTerm {
  std::string term;
  std::uint64_t frequency = 0;
  std::uint64_t doc_count = 0;

  friend bool operator==(const VocabTerm&, const VocabTerm&) = default;
};

// Immutable set of normal terms. Terms are kept in canonical order
// (frequency descending, then term ascending) and bucketed by length.
class Vocabulary {
 public:
  // Validates the invariants and throws FormatError on violation.
  Vocabulary(std::vector<VocabTerm> terms, bool case_folded);

  bool case_folded() const { return case_folded_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t max_term_length() const;

  // Canonical order.
  std::span<const VocabTerm> terms() const { return terms_; }

  // Applies the build-time case mode to `term` before lookup.
  bool Contains(std::string_view term) const;
  const VocabTerm* Find(std::string_view term) const;

  // Probe form of `term` under this vocabulary's case mode.
  std::string Canonicalize(std::string_view term) const;

  // Terms with min_len <= length <= max_len in canonical order.
  // Throws PreconditionViolated unless 2 <= min_len <= max_len.
  std::vector<VocabTerm> CandidatesInLengthRange(std::size_t min_len,
                                                 std::size_t max_len) const;

  // Positions into terms() of every term of exactly `length`, ascending.
  std::span<const std::uint32_t> Bucket(std::size_t length) const;

  std::uint64_t total_frequency() const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.case_folded_ == b.case_folded_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<VocabTerm> terms_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::map<std::size_t, std::vector<std::uint32_t>> length_index_;
  bool case_folded_;
};

// Throws EmptyCorpus when no token survives tokenization.
Vocabulary BuildVocabulary(std::span<const std::string> documents,
                           bool case_fold);

// Every regular file under `dir` (non-recursive) as one document, in file
// name order. Throws IoFailure when the directory cannot be read.
std::vector<std::string> ReadCorpusDirectory(const std::filesystem::path& dir);

// Text format: a `#translit-norm-vocab v1 case_fold=<bool>` header followed
// by `term<TAB>frequency<TAB>doc_count` lines in canonical order.
std::string SerializeVocabulary(const Vocabulary& vocab);
Vocabulary ParseVocabulary(std::string_view text);

void SaveVocabulary(const Vocabulary& vocab,
                    const std::filesystem::path& destination);
Vocabulary LoadVocabulary(const std::filesystem::path& source);

}  // namespace translit

#endif  // TRANSLIT_VOCABULARY_H_
