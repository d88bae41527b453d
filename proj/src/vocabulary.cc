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

#include "translit/vocabulary.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "translit/errors.h"

namespace translit {
namespace {

constexpr std::string_view kHeaderPrefix = "#translit-norm-vocab v1 case_fold=";

bool IsAsciiLetter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char ToLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool CanonicalLess(const VocabTerm& a, const VocabTerm& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.term < b.term;
}

// Empty string when the term is acceptable.
std::string CheckTerm(const VocabTerm& t, bool case_folded) {
  if (t.term.size() < kMinTermLength) return "term shorter than 2: '" + t.term + "'";
  for (char c : t.term) {
    if (!IsAsciiLetter(c)) return "non-letter in term '" + t.term + "'";
    if (case_folded && c != ToLower(c)) {
      return "upper-case term '" + t.term + "' in case-folded vocabulary";
    }
  }
  if (t.doc_count < 1 || t.frequency < t.doc_count) {
    return "need frequency >= doc_count >= 1 for '" + t.term + "'";
  }
  return {};
}

bool ParseCount(std::string_view text, std::uint64_t& out) {
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoFailure("error reading '" + path.string() + "'");
  return buf.str();
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text, bool case_fold) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsAsciiLetter(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && IsAsciiLetter(text[j])) ++j;
    if (j - i >= kMinTermLength) {
      std::string token(text.substr(i, j - i));
      if (case_fold) token = FoldCase(token);
      tokens.push_back(std::move(token));
    }
    i = j;
  }
  return tokens;
}

std::string FoldCase(std::string_view term) {
  std::string out(term);
  for (char& c : out) c = ToLower(c);
  return out;
}

Vocabulary::Vocabulary(std::vector<VocabTerm> terms, bool case_folded)
    : terms_(std::move(terms)), case_folded_(case_folded) {
  std::sort(terms_.begin(), terms_.end(), CanonicalLess);
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const VocabTerm& t = terms_[i];
    if (std::string err = CheckTerm(t, case_folded_); !err.empty()) {
      throw FormatError(err);
    }
    if (!index_.emplace(t.term, static_cast<std::uint32_t>(i)).second) {
      throw FormatError("duplicate term '" + t.term + "'");
    }
    length_index_[t.term.size()].push_back(static_cast<std::uint32_t>(i));
  }
}

std::size_t Vocabulary::max_term_length() const {
  return length_index_.empty() ? 0 : length_index_.rbegin()->first;
}

std::string Vocabulary::Canonicalize(std::string_view term) const {
  return case_folded_ ? FoldCase(term) : std::string(term);
}

const VocabTerm* Vocabulary::Find(std::string_view term) const {
  auto it = index_.find(Canonicalize(term));
  return it == index_.end() ? nullptr : &terms_[it->second];
}

bool Vocabulary::Contains(std::string_view term) const {
  return Find(term) != nullptr;
}

std::vector<VocabTerm> Vocabulary::CandidatesInLengthRange(
    std::size_t min_len, std::size_t max_len) const {
  if (min_len < kMinTermLength || min_len > max_len) {
    throw PreconditionViolated("length range needs 2 <= min_len <= max_len");
  }
  std::vector<std::uint32_t> positions;
  for (auto it = length_index_.lower_bound(min_len);
       it != length_index_.end() && it->first <= max_len; ++it) {
    positions.insert(positions.end(), it->second.begin(), it->second.end());
  }
  std::sort(positions.begin(), positions.end());
  std::vector<VocabTerm> out;
  out.reserve(positions.size());
  for (std::uint32_t p : positions) out.push_back(terms_[p]);
  return out;
}

std::span<const std::uint32_t> Vocabulary::Bucket(std::size_t length) const {
  auto it = length_index_.find(length);
  if (it == length_index_.end()) return {};
  return it->second;
}

std::uint64_t Vocabulary::total_frequency() const {
  std::uint64_t total = 0;
  for (const auto& t : terms_) total += t.frequency;
  return total;
}

Vocabulary BuildVocabulary(std::span<const std::string> documents,
                           bool case_fold) {
  std::unordered_map<std::string, VocabTerm> counts;
  for (const std::string& doc : documents) {
    std::unordered_map<std::string, bool> seen_here;
    for (std::string& token : Tokenize(doc, case_fold)) {
      VocabTerm& entry = counts[token];
      ++entry.frequency;
      if (seen_here.emplace(token, true).second) ++entry.doc_count;
      if (entry.term.empty()) entry.term = std::move(token);
    }
  }
  if (counts.empty()) throw EmptyCorpus();
  std::vector<VocabTerm> terms;
  terms.reserve(counts.size());
  for (auto& [_, entry] : counts) terms.push_back(std::move(entry));
  return Vocabulary(std::move(terms), case_fold);
}

std::vector<std::string> ReadCorpusDirectory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoFailure("corpus directory not found: '" + dir.string() + "'");
  }
  std::vector<fs::path> files;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file(ec)) files.push_back(it->path());
  }
  if (ec) throw IoFailure("cannot list '" + dir.string() + "': " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<std::string> documents;
  documents.reserve(files.size());
  for (const auto& f : files) documents.push_back(ReadFile(f));
  return documents;
}

std::string SerializeVocabulary(const Vocabulary& vocab) {
  std::string out;
  out += kHeaderPrefix;
  out += vocab.case_folded() ? "true" : "false";
  out += '\n';
  for (const VocabTerm& t : vocab.terms()) {
    out += t.term;
    out += '\t';
    out += std::to_string(t.frequency);
    out += '\t';
    out += std::to_string(t.doc_count);
    out += '\n';
  }
  return out;
}

Vocabulary ParseVocabulary(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty() || !lines[0].starts_with(kHeaderPrefix)) {
    throw FormatError("missing vocabulary header line");
  }
  const std::string_view flag = lines[0].substr(kHeaderPrefix.size());
  bool case_folded;
  if (flag == "true") {
    case_folded = true;
  } else if (flag == "false") {
    case_folded = false;
  } else {
    throw FormatError("bad case_fold value in header: '" + std::string(flag) + "'");
  }

  std::vector<VocabTerm> terms;
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::string_view line = lines[n];
    const std::string where = "line " + std::to_string(n + 1) + ": ";
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 =
        t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos ||
        line.find('\t', t2 + 1) != std::string_view::npos) {
      throw FormatError(where + "expected term<TAB>frequency<TAB>doc_count");
    }
    VocabTerm t;
    t.term = std::string(line.substr(0, t1));
    if (!ParseCount(line.substr(t1 + 1, t2 - t1 - 1), t.frequency) ||
        !ParseCount(line.substr(t2 + 1), t.doc_count)) {
      throw FormatError(where + "non-integer count");
    }
    if (std::string err = CheckTerm(t, case_folded); !err.empty()) {
      throw FormatError(where + err);
    }
    if (auto [it, fresh] = seen.emplace(line.substr(0, t1), n); !fresh) {
      throw FormatError(where + "duplicate term '" + t.term + "' (first on line " +
                        std::to_string(it->second + 1) + ")");
    }
    terms.push_back(std::move(t));
  }
  return Vocabulary(std::move(terms), case_folded);
}

void SaveVocabulary(const Vocabulary& vocab,
                    const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot write '" + destination.string() + "'");
  const std::string text = SerializeVocabulary(vocab);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoFailure("error writing '" + destination.string() + "'");
}

Vocabulary LoadVocabulary(const std::filesystem::path& source) {
  return ParseVocabulary(ReadFile(source));
}

}  // namespace translit
