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

#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "reference_scan.h"
#include "translit/errors.h"

namespace translit {
namespace {

using translit::testing::RandomQuery;
using translit::testing::RandomVocabulary;
using translit::testing::ReferenceNormalize;

const ModelConfig kM1 = ModelConfig::Default(ModelId::kM1);
const ModelConfig kM2 = ModelConfig::Default(ModelId::kM2);
const ModelConfig kM3 = ModelConfig::Default(ModelId::kM3);
const ModelConfig kM4 = ModelConfig::Default(ModelId::kM4);

std::vector<std::string> Terms(const std::vector<Candidate>& ranked) {
  std::vector<std::string> out;
  for (const auto& c : ranked) out.push_back(c.term);
  return out;
}

Vocabulary Equal(std::initializer_list<const char*> terms) {
  std::vector<VocabTerm> v;
  for (const char* t : terms) v.push_back({t, 1, 1});
  return Vocabulary(std::move(v), true);
}

TEST(RuleWeightsTest, Defaults) {
  const RuleWeights w;
  EXPECT_EQ(w.wt1, Rational::ParseDecimal("0.60"));
  EXPECT_EQ(w.wt2, Rational::ParseDecimal("0.40"));
  EXPECT_EQ(w.wt3, Rational::ParseDecimal("0.2"));
  EXPECT_EQ(w.wt4, Rational::ParseDecimal("0.75"));
  EXPECT_EQ(w.wt5, Rational::ParseDecimal("0.25"));
}

TEST(ModelConfigTest, DefaultsSatisfyModelInvariants) {
  EXPECT_EQ(kM1.length_rule, LengthRule::kMaxLen);
  EXPECT_EQ(kM1.char_rules, CharRules{});
  EXPECT_EQ(kM1.eq_variant, EqVariant::kEq3);
  EXPECT_EQ(kM2.length_rule, LengthRule::kAvgLen);
  EXPECT_EQ(kM2.char_rules, (CharRules{true, true, false}));
  EXPECT_EQ(kM3.char_rules, (CharRules{true, true, true}));
  EXPECT_EQ(kM4.length_rule, LengthRule::kVocabLonger);
  EXPECT_EQ(kM4.char_rules, (CharRules{true, true, true}));
  for (ModelId id : kAllModels) EXPECT_NO_THROW(ModelConfig::Default(id).Validate());
}

TEST(ModelConfigTest, ValidateRejectsInconsistentConfigs) {
  ModelConfig c = kM1;
  c.eq_variant = EqVariant::kEq1;
  EXPECT_THROW(c.Validate(), InvalidConfig);
  c = kM2;
  c.char_rules.last_consonant = true;
  EXPECT_THROW(c.Validate(), InvalidConfig);
  c = kM3;
  c.weights.wt4 = Rational(5, 4);
  EXPECT_THROW(c.Validate(), InvalidConfig);
  c = kM3;
  c.weights.wt2 = Rational(-1, 10);
  EXPECT_THROW(c.Validate(), InvalidConfig);
}

TEST(ConfigFileTest, ParsesOverrides) {
  const ConfigOverrides o = ParseConfigOverrides(
      "# experiment\nmodel = m2\neq=2\nwt1=0.9\n\nwt5 = .1\n");
  EXPECT_EQ(o.model, ModelId::kM2);
  EXPECT_EQ(o.eq, EqVariant::kEq2);
  EXPECT_EQ(o.weights[0], Rational(9, 10));
  EXPECT_FALSE(o.weights[1].has_value());
  EXPECT_EQ(o.weights[4], Rational(1, 10));

  const ModelConfig c = ResolveConfig(*o.model, o);
  EXPECT_EQ(c.eq_variant, EqVariant::kEq2);
  EXPECT_EQ(c.weights.wt1, Rational(9, 10));
  EXPECT_EQ(c.weights.wt2, Rational(2, 5));
}

TEST(ConfigFileTest, DefaultsReproduceModels) {
  for (ModelId id : kAllModels) {
    EXPECT_EQ(ResolveConfig(id, {}), ModelConfig::Default(id));
  }
}

TEST(ConfigFileTest, Errors) {
  EXPECT_THROW(ParseConfigOverrides("model=m5"), InvalidConfig);
  EXPECT_THROW(ParseConfigOverrides("eq=4"), InvalidConfig);
  EXPECT_THROW(ParseConfigOverrides("wt6=0.1"), InvalidConfig);
  EXPECT_THROW(ParseConfigOverrides("wt1=0:60"), InvalidConfig);
  EXPECT_THROW(ParseConfigOverrides("wt1"), InvalidConfig);
  EXPECT_THROW(ResolveConfig(ModelId::kM3, ParseConfigOverrides("wt1=1.5")),
               InvalidConfig);
  EXPECT_THROW(ResolveConfig(ModelId::kM1, ParseConfigOverrides("eq=1")),
               InvalidConfig);
}

TEST(EffectiveLengthTest, LengthRules) {
  EXPECT_EQ(EffectiveLength(6, 5, LengthRule::kMaxLen), Rational(6));
  EXPECT_EQ(EffectiveLength(5, 6, LengthRule::kMaxLen), Rational(6));
  EXPECT_EQ(EffectiveLength(6, 5, LengthRule::kAvgLen), Rational(11, 2));
  EXPECT_EQ(EffectiveLength(6, 5, LengthRule::kVocabLonger), Rational(6));
  EXPECT_THROW(EffectiveLength(1, 5, LengthRule::kMaxLen), PreconditionViolated);
  EXPECT_THROW(EffectiveLength(5, 1, LengthRule::kAvgLen), PreconditionViolated);
  EXPECT_THROW(EffectiveLength(5, 5, LengthRule::kVocabLonger), PreconditionViolated);
}

TEST(QualifiesTest, ThresholdIsStrictHalfLength) {
  EXPECT_FALSE(Qualifies("phulen", "fulaat", EditDistance{4}, kM1));
  EXPECT_TRUE(Qualifies("phule", "phulen", EditDistance{1}, kM1));
  // len 6 -> alpha 3: ed 2 passes, ed 3 does not.
  EXPECT_TRUE(Qualifies("abcdef", "abcxyz", EditDistance{2}, kM1));
  EXPECT_FALSE(Qualifies("abcdef", "abcxyz", EditDistance{3}, kM1));
  // AvgLen (5+6)/2 = 11/2 -> alpha 11/4: ed 2 passes, ed 3 does not.
  EXPECT_TRUE(Qualifies("phule", "phulen", EditDistance{2}, kM3));
  EXPECT_FALSE(Qualifies("phule", "phulen", EditDistance{3}, kM3));
}

TEST(QualifiesTest, LengthRules) {
  for (int ed = 0; ed < 4; ++ed) {
    EXPECT_FALSE(Qualifies("phulen", "phule", EditDistance{std::size_t(ed)}, kM4));
  }
  EXPECT_FALSE(Qualifies("x", "xy", EditDistance{1}, kM1));
  EXPECT_FALSE(Qualifies("xy", "x", EditDistance{1}, kM3));
  EXPECT_TRUE(Qualifies("phule", "phulen", EditDistance{1}, kM4));
}

TEST(LastConsonantTest, Examples) {
  EXPECT_EQ(LastConsonant("phule"), U'l');
  EXPECT_EQ(LastConsonant("phulen"), U'n');
  EXPECT_EQ(LastConsonant("aaee"), std::nullopt);
  EXPECT_EQ(LastConsonant("shrII"), U'r');
  EXPECT_EQ(LastConsonant(""), std::nullopt);
}

TEST(PruningWeightTest, CharacterRules) {
  EXPECT_EQ(PruningWeight("phule", "phulen", kM3), Rational(5, 4));
  EXPECT_EQ(PruningWeight("gaane", "kaane", kM2), Rational(4, 5));
  EXPECT_EQ(PruningWeight("gaane", "gaanee", kM2), Rational(1));
  // Everything matches under M3: wt1 + wt2 + wt4.
  EXPECT_EQ(PruningWeight("gaane", "gaane", kM3), Rational(7, 4));
  // Nothing matches: wt2 + wt3 + wt5.
  EXPECT_EQ(PruningWeight("gaane", "tiiki", kM3), Rational(17, 20));
  // Two all-vowel terms have no last consonant to match.
  EXPECT_EQ(PruningWeight("aai", "aaii", kM3), Rational(3, 5) + Rational(2, 5) + Rational(1, 4));
}

TEST(PruningWeightTest, ModelOneIsConstant) {
  EXPECT_EQ(PruningWeight("gaane", "kaane", kM1), Rational(1));
  EXPECT_EQ(PruningWeight("ab", "zz", kM1), Rational(1));
  EXPECT_THROW(PruningWeight("a", "ab", kM3), PreconditionViolated);
}

TEST(ProxyWeightTest, Equations) {
  EXPECT_EQ(ProxyWeight(1, EditDistance{1}, 6, EqVariant::kEq3), Rational(5, 6));
  EXPECT_NEAR(ProxyWeight(1, EditDistance{1}, 6, EqVariant::kEq3).ToDouble(), 0.8333, 1e-4);
  const Rational m3 = ProxyWeight(Rational(5, 4), EditDistance{1}, Rational(11, 2),
                                  EqVariant::kEq1);
  EXPECT_EQ(m3, Rational(5, 4) - Rational(2, 11));
  EXPECT_NEAR(m3.ToDouble(), 1.0682, 1e-4);
  EXPECT_EQ(ProxyWeight(Rational(3, 7), EditDistance{0}, 9, EqVariant::kEq1), Rational(3, 7));
  EXPECT_EQ(ProxyWeight(Rational(3, 7), EditDistance{1}, 9, EqVariant::kEq2), Rational(3, 7));
  // Eq. 3 ignores the pruning weight.
  EXPECT_EQ(ProxyWeight(Rational(3, 7), EditDistance{2}, 8, EqVariant::kEq3), Rational(3, 4));
}

TEST(NormalizeTest, ModelOneScoresByNormalizedDistance) {
  const auto ranked = Normalize("gaane", Equal({"gaanee", "kaane"}), kM1, 10);
  ASSERT_EQ(Terms(ranked), (std::vector<std::string>{"gaanee", "kaane"}));
  // kaane has five letters, so MaxLen is 5 for it, not 6.
  EXPECT_EQ(ranked[0].proxy_weight, Rational(1) - Rational(1, 6));
  EXPECT_EQ(ranked[1].proxy_weight, Rational(1) - Rational(1, 5));
}

TEST(NormalizeTest, FirstLetterRuleBreaksModelOneTie) {
  const Vocabulary v = Equal({"baane", "gaant"});
  const auto m1 = Normalize("gaane", v, kM1, 10);
  ASSERT_EQ(Terms(m1), (std::vector<std::string>{"baane", "gaant"}));
  EXPECT_EQ(m1[0].proxy_weight, m1[1].proxy_weight);
  const auto m2 = Normalize("gaane", v, kM2, 10);
  ASSERT_EQ(Terms(m2), (std::vector<std::string>{"gaant", "baane"}));
  EXPECT_GT(m2[0].proxy_weight, m2[1].proxy_weight);
}

TEST(NormalizeTest, ModelsTwoAndThreePreferMatchingFirstLetter) {
  const Vocabulary v = Equal({"gaanee", "kaane"});
  for (const ModelConfig& c : {kM2, kM3}) {
    const auto ranked = Normalize("gaane", v, c, 10);
    ASSERT_EQ(Terms(ranked), (std::vector<std::string>{"gaanee", "kaane"}));
    EXPECT_GT(ranked[0].proxy_weight, ranked[1].proxy_weight);
  }
  // M4 only admits longer vocabulary terms.
  EXPECT_EQ(Terms(Normalize("gaane", v, kM4, 10)), (std::vector<std::string>{"gaanee"}));
}

TEST(NormalizeTest, ExactMatchShortcut) {
  const Vocabulary v = Equal({"phule", "phulen", "phul"});
  const auto ranked = Normalize("phule", v, kM3, 10);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].term, "phule");
  EXPECT_EQ(ranked[0].edit_distance, EditDistance{0});
  EXPECT_EQ(ranked[0].proxy_weight, Rational(7, 4));
  EXPECT_EQ(Normalize("PHULE", v, kM1, 10)[0].proxy_weight, Rational(1));
}

TEST(NormalizeTest, TiesFallBackToFrequencyThenTerm) {
  const Vocabulary v({{"gaana", 1, 1}, {"gaano", 5, 2}, {"gaanu", 1, 1}}, true);
  EXPECT_EQ(Terms(Normalize("gaane", v, kM1, 10)),
            (std::vector<std::string>{"gaano", "gaana", "gaanu"}));
}

TEST(NormalizeTest, TopKTruncates) {
  const Vocabulary v = Equal({"gaana", "gaano", "gaanu", "gaani"});
  EXPECT_EQ(Terms(Normalize("gaane", v, kM1, 2)),
            (std::vector<std::string>{"gaana", "gaani"}));
  EXPECT_THROW(Normalize("gaane", v, kM1, 0), PreconditionViolated);
}

TEST(NormalizeTest, RejectsOneCharacterQuery) {
  EXPECT_THROW(Normalize("x", Equal({"xy"}), kM1, 10), PreconditionViolated);
  EXPECT_THROW(Normalize("", Equal({"xy"}), kM3, 10), PreconditionViolated);
}

TEST(NormalizeTest, NoCandidatesIsEmpty) {
  EXPECT_TRUE(Normalize("phulen", Equal({"fulaat"}), kM1, 10).empty());
}

TEST(NormalizePropertyTest, MatchesReferenceAndInvariants) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 150; ++round) {
    const Vocabulary v = RandomVocabulary(rng, 300);
    for (int q = 0; q < 10; ++q) {
      const std::string query = RandomQuery(rng);
      for (ModelId id : kAllModels) {
        ModelConfig c = ModelConfig::Default(id);
        if (id != ModelId::kM1 && rng() % 3 == 0) c.eq_variant = EqVariant::kEq2;
        const auto got = Normalize(query, v, c, 10);
        ASSERT_EQ(got, ReferenceNormalize(query, v, c, 10)) << query;
        for (const auto& cand : got) {
          EXPECT_LT(Rational(2 * static_cast<std::int64_t>(cand.edit_distance.value)),
                    cand.effective_length);
          if (id == ModelId::kM1) {
            EXPECT_GT(cand.proxy_weight, Rational(1, 2));
            EXPECT_LE(cand.proxy_weight, Rational(1));
          }
          if (id == ModelId::kM4 && cand.edit_distance.value > 0) {
            EXPECT_GT(cand.term.size(), query.size());
          }
        }
        for (std::size_t i = 1; i < got.size(); ++i) {
          EXPECT_TRUE(RanksBefore(got[i - 1], got[i]));
        }
      }
    }
  }
}

TEST(NormalizePropertyTest, ConcurrentCallsAgree) {
  std::mt19937_64 rng(41);
  const Vocabulary v = RandomVocabulary(rng, 3000);
  std::vector<std::string> queries;
  for (int i = 0; i < 40; ++i) queries.push_back(RandomQuery(rng));
  std::vector<std::vector<Candidate>> expected;
  for (const auto& q : queries) expected.push_back(Normalize(q, v, kM3, 10));

  std::vector<int> mismatches(4, 0);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < queries.size(); ++i) {
        const std::size_t k = (i * 7 + t) % queries.size();
        if (Normalize(queries[k], v, kM3, 10) != expected[k]) ++mismatches[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(mismatches, std::vector<int>(4, 0));
}

}  // namespace
}  // namespace translit
