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

#include "translit/rules.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "translit/errors.h"
#include "translit/utf8.h"

namespace translit {
namespace {

bool IsVowel(char32_t c) {
  if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
  return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u';
}

std::optional<char32_t> LastConsonantOf(std::u32string_view term) {
  for (auto it = term.rbegin(); it != term.rend(); ++it) {
    if (!IsVowel(*it)) return *it;
  }
  return std::nullopt;
}

Rational PruningWeightOf(std::u32string_view query, std::u32string_view vocab_term,
                         const ModelConfig& config) {
  if (query.size() < kMinTermLength || vocab_term.size() < kMinTermLength) {
    throw PreconditionViolated("pruning weight needs terms of length >= 2");
  }
  if (config.model_id == ModelId::kM1) return Rational(1);
  const RuleWeights& w = config.weights;
  Rational sum;
  // Rules 6a/6b.
  if (config.char_rules.first_char) {
    sum += query[0] == vocab_term[0] ? w.wt1 : w.wt2;
  }
  // Rules 7a/7b.
  if (config.char_rules.second_char) {
    sum += query[1] == vocab_term[1] ? w.wt2 : w.wt3;
  }
  // Rules 8a/8b; two all-vowel terms do not count as a match.
  if (config.char_rules.last_consonant) {
    const auto a = LastConsonantOf(query);
    const auto b = LastConsonantOf(vocab_term);
    sum += (a && b && *a == *b) ? w.wt4 : w.wt5;
  }
  return sum;
}

// Largest edit distance with 2 * ed < len.
std::size_t MaxAdmissibleDistance(const Rational& len) {
  // len is an integer or a half-integer, so 2 * len is integral.
  const Rational twice = len * Rational(2);
  const std::int64_t t = twice.num() / twice.den();
  if (t <= 0) return 0;
  return static_cast<std::size_t>((t - 1) / 4);
}

bool ThresholdHolds(EditDistance ed, const Rational& len) {
  return Rational(2 * static_cast<std::int64_t>(ed.value)) < len;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view ModelName(ModelId id) {
  switch (id) {
    case ModelId::kM1: return "M1";
    case ModelId::kM2: return "M2";
    case ModelId::kM3: return "M3";
    case ModelId::kM4: return "M4";
  }
  return "?";
}

std::optional<ModelId> ParseModelId(std::string_view text) {
  if (text.size() != 2 || (text[0] != 'm' && text[0] != 'M')) return std::nullopt;
  switch (text[1]) {
    case '1': return ModelId::kM1;
    case '2': return ModelId::kM2;
    case '3': return ModelId::kM3;
    case '4': return ModelId::kM4;
    default: return std::nullopt;
  }
}

ModelConfig ModelConfig::Default(ModelId id) {
  ModelConfig c;
  c.model_id = id;
  switch (id) {
    case ModelId::kM1:
      c.length_rule = LengthRule::kMaxLen;
      c.char_rules = {};
      c.eq_variant = EqVariant::kEq3;
      break;
    case ModelId::kM2:
      c.length_rule = LengthRule::kAvgLen;
      c.char_rules = {true, true, false};
      c.eq_variant = EqVariant::kEq1;
      break;
    case ModelId::kM3:
      c.length_rule = LengthRule::kAvgLen;
      c.char_rules = {true, true, true};
      c.eq_variant = EqVariant::kEq1;
      break;
    case ModelId::kM4:
      c.length_rule = LengthRule::kVocabLonger;
      c.char_rules = {true, true, true};
      c.eq_variant = EqVariant::kEq1;
      break;
  }
  return c;
}

void ModelConfig::Validate() const {
  const ModelConfig expected = Default(model_id);
  const std::string name(ModelName(model_id));
  if (length_rule != expected.length_rule || char_rules != expected.char_rules) {
    throw InvalidConfig(name + ": rule set does not match the model");
  }
  if (model_id == ModelId::kM1 && eq_variant != EqVariant::kEq3) {
    throw InvalidConfig("M1 scores with equation 3 only");
  }
  const Rational* all[] = {&weights.wt1, &weights.wt2, &weights.wt3,
                           &weights.wt4, &weights.wt5};
  for (int i = 0; i < 5; ++i) {
    if (*all[i] < Rational(0) || *all[i] > Rational(1)) {
      throw InvalidConfig("wt" + std::to_string(i + 1) + " outside [0,1]");
    }
  }
}

ConfigOverrides ParseConfigOverrides(std::string_view text) {
  ConfigOverrides out;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InvalidConfig(where + "expected key=value");
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (key == "model") {
      out.model = ParseModelId(value);
      if (!out.model) throw InvalidConfig(where + "model must be m1..m4");
    } else if (key == "eq") {
      if (value == "1") {
        out.eq = EqVariant::kEq1;
      } else if (value == "2") {
        out.eq = EqVariant::kEq2;
      } else if (value == "3") {
        out.eq = EqVariant::kEq3;
      } else {
        throw InvalidConfig(where + "eq must be 1, 2 or 3");
      }
    } else if (key.size() == 3 && key.starts_with("wt") && key[2] >= '1' &&
               key[2] <= '5') {
      out.weights[key[2] - '1'] = Rational::ParseDecimal(value);
    } else {
      throw InvalidConfig(where + "unknown key '" + std::string(key) + "'");
    }
  }
  return out;
}

ConfigOverrides LoadConfigOverrides(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfigOverrides(buf.str());
}

ModelConfig ResolveConfig(ModelId model, const ConfigOverrides& overrides) {
  ModelConfig c = ModelConfig::Default(model);
  if (overrides.eq) c.eq_variant = *overrides.eq;
  Rational* slots[] = {&c.weights.wt1, &c.weights.wt2, &c.weights.wt3,
                       &c.weights.wt4, &c.weights.wt5};
  for (int i = 0; i < 5; ++i) {
    if (overrides.weights[i]) *slots[i] = *overrides.weights[i];
  }
  c.Validate();
  return c;
}

Rational EffectiveLength(std::size_t vocab_len, std::size_t query_len,
                         LengthRule rule) {
  if (vocab_len <= 1 || query_len <= 1) {
    throw PreconditionViolated("both terms must be longer than one character");
  }
  const auto l1 = static_cast<std::int64_t>(vocab_len);
  const auto l2 = static_cast<std::int64_t>(query_len);
  switch (rule) {
    case LengthRule::kMaxLen:
      return Rational(std::max(l1, l2));
    case LengthRule::kAvgLen:
      return Rational(l1 + l2, 2);
    case LengthRule::kVocabLonger:
      if (l1 <= l2) {
        throw PreconditionViolated("vocabulary term must be longer than the query");
      }
      return Rational(l1);
  }
  return Rational(1);
}

bool Qualifies(std::string_view query, std::string_view vocab_term,
               EditDistance ed, const ModelConfig& config) {
  const std::size_t l2 = CodePointLength(query);
  const std::size_t l1 = CodePointLength(vocab_term);
  if (l1 <= 1 || l2 <= 1) return false;
  if (config.length_rule == LengthRule::kVocabLonger && l1 <= l2) return false;
  return ThresholdHolds(ed, EffectiveLength(l1, l2, config.length_rule));
}

std::optional<char32_t> LastConsonant(std::string_view term) {
  return LastConsonantOf(DecodeUtf8(term));
}

Rational PruningWeight(std::string_view query, std::string_view vocab_term,
                       const ModelConfig& config) {
  return PruningWeightOf(DecodeUtf8(query), DecodeUtf8(vocab_term), config);
}

Rational ProxyWeight(const Rational& pruning_weight, EditDistance ed,
                     const Rational& effective_length, EqVariant variant) {
  const Rational d(static_cast<std::int64_t>(ed.value));
  switch (variant) {
    case EqVariant::kEq1:
      return pruning_weight - d / effective_length;
    case EqVariant::kEq2:
      return pruning_weight - (d - Rational(1)) / effective_length;
    case EqVariant::kEq3:
      return Rational(1) - d / effective_length;
  }
  return Rational(0);
}

bool RanksBefore(const Candidate& a, const Candidate& b) {
  if (a.proxy_weight != b.proxy_weight) return a.proxy_weight > b.proxy_weight;
  if (a.edit_distance != b.edit_distance) return a.edit_distance < b.edit_distance;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.term < b.term;
}

std::vector<Candidate> Normalize(std::string_view query, const Vocabulary& vocab,
                                 const ModelConfig& config, std::size_t top_k) {
  if (top_k == 0) throw PreconditionViolated("top_k must be at least 1");
  const std::string probe = vocab.Canonicalize(query);
  const std::u32string q = DecodeUtf8(probe);
  const std::size_t l2 = q.size();
  if (l2 <= 1) {
    throw PreconditionViolated("query term '" + std::string(query) +
                               "' is shorter than two characters");
  }

  if (const VocabTerm* hit = vocab.Find(probe)) {
    Candidate self;
    self.term = hit->term;
    self.edit_distance = EditDistance{0};
    self.pruning_weight = PruningWeightOf(q, q, config);
    self.effective_length = Rational(static_cast<std::int64_t>(l2));
    self.proxy_weight = ProxyWeight(self.pruning_weight, self.edit_distance,
                                    self.effective_length, config.eq_variant);
    self.frequency = hit->frequency;
    return {self};
  }

  std::vector<Candidate> found;
  const auto terms = vocab.terms();
  for (std::size_t l1 = kMinTermLength; l1 <= vocab.max_term_length(); ++l1) {
    if (config.length_rule == LengthRule::kVocabLonger && l1 <= l2) continue;
    const Rational len = EffectiveLength(l1, l2, config.length_rule);
    const std::size_t bound = MaxAdmissibleDistance(len);
    // ed >= |l1 - l2|, so whole buckets fall outside the threshold.
    if ((l1 > l2 ? l1 - l2 : l2 - l1) > bound) continue;
    for (std::uint32_t pos : vocab.Bucket(l1)) {
      const VocabTerm& v = terms[pos];
      const auto d = internal::BandedDistance(std::u32string_view(q),
                                              std::string_view(v.term), bound);
      if (!d) continue;
      Candidate c;
      c.term = v.term;
      c.edit_distance = EditDistance{*d};
      c.effective_length = len;
      c.pruning_weight = PruningWeightOf(q, DecodeUtf8(v.term), config);
      c.proxy_weight = ProxyWeight(c.pruning_weight, c.edit_distance, len,
                                   config.eq_variant);
      c.frequency = v.frequency;
      found.push_back(std::move(c));
    }
  }

  if (found.size() > top_k) {
    std::partial_sort(found.begin(), found.begin() + top_k, found.end(),
                      RanksBefore);
    found.resize(top_k);
  } else {
    std::sort(found.begin(), found.end(), RanksBefore);
  }
  return found;
}

}  // namespace translit
