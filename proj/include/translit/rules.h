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

#ifndef TRANSLIT_RULES_H_
#define TRANSLIT_RULES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "translit/edit_distance.h"
#include "translit/rational.h"
#include "translit/vocabulary.h"

namespace translit {

enum class ModelId { kM1, kM2, kM3, kM4 };

inline constexpr std::array<ModelId, 4> kAllModels = {
    ModelId::kM1, ModelId::kM2, ModelId::kM3, ModelId::kM4};

// "M1".."M4".
std::string_view ModelName(ModelId id);
// Accepts m1..m4 in either case.
std::optional<ModelId> ParseModelId(std::string_view text);

enum class LengthRule {
  kMaxLen,       // len = max(l1, l2)
  kAvgLen,       // len = (l1 + l2) / 2
  kVocabLonger,  // len = l1, and only vocabulary terms longer than the query
};

enum class EqVariant {
  kEq1,  // PrunWt - ed / len
  kEq2,  // PrunWt - (ed - 1) / len
  kEq3,  // 1 - ed / len
};

struct CharRules {
  bool first_char = false;
  bool second_char = false;
  bool last_consonant = false;

  friend bool operator==(const CharRules&, const CharRules&) = default;
};

struct RuleWeights {
  Rational wt1{3, 5};
  Rational wt2{2, 5};
  Rational wt3{1, 5};
  Rational wt4{3, 4};
  Rational wt5{1, 4};

  friend bool operator==(const RuleWeights&, const RuleWeights&) = default;
};

struct ModelConfig {
  ModelId model_id = ModelId::kM3;
  LengthRule length_rule = LengthRule::kAvgLen;
  CharRules char_rules;
  EqVariant eq_variant = EqVariant::kEq1;
  RuleWeights weights;

  // The fixed rule set of each model with the default weights.
  static ModelConfig Default(ModelId id);

  // Throws InvalidConfig when a weight leaves [0,1] or the rule set does not
  // match the model id (e.g. M1 with anything but Eq3).
  void Validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

// key=value overrides read from a config file. `#` starts a comment line.
// Recognized keys: model (m1..m4), eq (1|2|3), wt1..wt5 (decimals).
struct ConfigOverrides {
  std::optional<ModelId> model;
  std::optional<EqVariant> eq;
  std::array<std::optional<Rational>, 5> weights;
};

ConfigOverrides ParseConfigOverrides(std::string_view text);
ConfigOverrides LoadConfigOverrides(const std::filesystem::path& path);

// Default(model) with the overrides' eq and weights applied, validated.
ModelConfig ResolveConfig(ModelId model, const ConfigOverrides& overrides);

// Throws PreconditionViolated when either length is <= 1 (Rule 1), or under
// kVocabLonger when vocab_len <= query_len (Rule 3).
Rational EffectiveLength(std::size_t vocab_len, std::size_t query_len,
                         LengthRule rule);

// Rules 1, 3 and 5: both terms longer than one character, a longer vocabulary
// term under kVocabLonger, and ed < len / 2 compared exactly.
bool Qualifies(std::string_view query, std::string_view vocab_term,
               EditDistance ed, const ModelConfig& config);

// Last character outside {a,e,i,o,u}, compared case-insensitively.
std::optional<char32_t> LastConsonant(std::string_view term);

// 1 under M1; otherwise the sum of the enabled character-rule contributions.
// Throws PreconditionViolated when either term is shorter than 2.
Rational PruningWeight(std::string_view query, std::string_view vocab_term,
                       const ModelConfig& config);

Rational ProxyWeight(const Rational& pruning_weight, EditDistance ed,
                     const Rational& effective_length, EqVariant variant);

// A vocabulary term scored against one query term.
struct Candidate {
  std::string term;
  EditDistance edit_distance;
  Rational pruning_weight;
  Rational effective_length;
  Rational proxy_weight;
  std::uint64_t frequency = 0;

  double score() const { return proxy_weight.ToDouble(); }

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Ranking order: proxy weight descending, then edit distance ascending, then
// frequency descending, then term ascending.
bool RanksBefore(const Candidate& a, const Candidate& b);

// Ranked candidate normal terms for `query`, at most `top_k` of them. A query
// already in the vocabulary yields only itself at distance 0.
// Throws PreconditionViolated when top_k == 0 or the query has fewer than two
// characters.
std::vector<Candidate> Normalize(std::string_view query,
                                 const Vocabulary& vocab,
                                 const ModelConfig& config, std::size_t top_k);

}  // namespace translit

#endif  // TRANSLIT_RULES_H_
