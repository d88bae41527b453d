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

#ifndef TRANSLIT_TESTS_REFERENCE_SCAN_H_
#define TRANSLIT_TESTS_REFERENCE_SCAN_H_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "translit/edit_distance.h"
#include "translit/rules.h"
#include "translit/vocabulary.h"

namespace translit::testing {

// Full-vocabulary scan with unbounded distances and no length prefilter.
inline std::vector<Candidate> ReferenceNormalize(const std::string& raw_query,
                                                 const Vocabulary& vocab,
                                                 const ModelConfig& config,
                                                 std::size_t top_k) {
  const std::string query = vocab.Canonicalize(raw_query);
  std::vector<Candidate> all;
  for (const VocabTerm& v : vocab.terms()) {
    const EditDistance ed = Levenshtein(query, v.term);
    if (ed.value == 0) {
      // Exact match: only the query itself is returned.
      Candidate self{v.term, ed, PruningWeight(query, query, config),
                     Rational(static_cast<std::int64_t>(query.size())), {}, v.frequency};
      self.proxy_weight = ProxyWeight(self.pruning_weight, ed,
                                      self.effective_length, config.eq_variant);
      return {self};
    }
    if (!Qualifies(query, v.term, ed, config)) continue;
    Candidate c;
    c.term = v.term;
    c.edit_distance = ed;
    c.effective_length = EffectiveLength(v.term.size(), query.size(), config.length_rule);
    c.pruning_weight = PruningWeight(query, v.term, config);
    c.proxy_weight = ProxyWeight(c.pruning_weight, ed, c.effective_length,
                                 config.eq_variant);
    c.frequency = v.frequency;
    all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
    return std::make_tuple(b.proxy_weight, a.edit_distance, b.frequency, a.term) <
           std::make_tuple(a.proxy_weight, b.edit_distance, a.frequency, b.term);
  });
  if (all.size() > top_k) all.resize(top_k);
  return all;
}

// Random lower-case vocabulary drawn from a small alphabet so that many
// terms fall within each other's thresholds.
inline Vocabulary RandomVocabulary(std::mt19937_64& rng, std::size_t max_terms,
                                   std::string_view alphabet = "aeikmnpt") {
  const std::size_t target = 1 + rng() % max_terms;
  std::vector<VocabTerm> terms;
  std::set<std::string> seen;
  for (std::size_t attempt = 0; terms.size() < target && attempt < target * 4; ++attempt) {
    std::string t(2 + rng() % 9, 'a');
    for (char& c : t) c = alphabet[rng() % alphabet.size()];
    if (!seen.insert(t).second) continue;
    const std::uint64_t docs = 1 + rng() % 3;
    terms.push_back({t, docs + rng() % 3, docs});
  }
  return Vocabulary(std::move(terms), true);
}

inline std::string RandomQuery(std::mt19937_64& rng,
                               std::string_view alphabet = "aeikmnpt") {
  std::string t(2 + rng() % 9, 'a');
  for (char& c : t) c = alphabet[rng() % alphabet.size()];
  return t;
}

}  // namespace translit::testing

#endif  // TRANSLIT_TESTS_REFERENCE_SCAN_H_
