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

#ifndef TRANSLIT_EVALUATION_H_
#define TRANSLIT_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "translit/rules.h"
#include "translit/vocabulary.h"

namespace translit {

struct GoldPair {
  std::string noisy;
  std::string gold;

  friend bool operator==(const GoldPair&, const GoldPair&) = default;
};

// One `noisy<TAB>gold` pair per line; blank and `#` lines are skipped.
std::vector<GoldPair> ParseGoldSet(std::string_view text);
std::vector<GoldPair> LoadGoldSet(const std::filesystem::path& path);
std::string SerializeGoldSet(std::span<const GoldPair> pairs);

// Cut-off used by every evaluation run.
inline constexpr std::size_t kEvalTopK = 10;

// 1/r for the 1-based rank r of `gold`, 0 when absent.
double ReciprocalRank(std::span<const Candidate> ranked, std::string_view gold);

// 1 when `gold` is among the first min(k, size) entries. k must be >= 1.
int SuccessAtK(std::span<const Candidate> ranked, std::string_view gold,
               std::size_t k);

struct ModelScores {
  ModelId model = ModelId::kM1;
  double avg_mrr = 0;
  double avg_p1 = 0;
  double avg_p5 = 0;
  double avg_p10 = 0;
  std::size_t sample_count = 0;
};

// Runs Normalize(noisy, vocab, config, 10) for every pair and averages.
// Throws EmptyGoldSet, or GoldTermMissing naming every absent gold term.
ModelScores EvaluateModel(std::span<const GoldPair> gold_set,
                          const Vocabulary& vocab, const ModelConfig& config);

struct EvalReport {
  std::vector<ModelScores> columns;
};

// M1..M4 with their default configurations.
EvalReport CompareModels(std::span<const GoldPair> gold_set,
                         const Vocabulary& vocab);

// Tab-separated, one row per measure (Avg_MRR, Avg_P@1, Avg_P@5, Avg_P@10),
// one column per model, six decimals.
std::string FormatReport(const EvalReport& report);

// Seeded synthetic gold set: each pair corrupts a vocabulary term with one of
// substitution, deletion, insertion, an e/a vowel swap or an f/ph swap, and
// keeps it only when the result is itself out of vocabulary.
std::vector<GoldPair> SynthesizeGoldSet(const Vocabulary& vocab,
                                        std::size_t count, std::uint64_t seed);

}  // namespace translit

#endif  // TRANSLIT_EVALUATION_H_
