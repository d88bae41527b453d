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

#include "translit/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "translit/errors.h"

namespace translit {
namespace {

// lcm(1..10): every reciprocal rank up to the cut-off is an integer multiple
// of 1/kRankDenominator, so sums are exact and order-independent.
constexpr std::uint64_t kRankDenominator = 2520;
static_assert(kEvalTopK <= 10);

std::size_t RankOf(std::span<const Candidate> ranked, std::string_view gold) {
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (ranked[i].term == gold) return i + 1;
  }
  return 0;
}

std::string FormatCell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Deterministic across standard libraries: mt19937_64's output sequence is
// fixed by the standard, distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

std::string Corrupt(const std::string& term, Draw& draw) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  enum Kind { kSubstitute, kDelete, kInsert, kVowelSwap, kPhSwap };
  auto kind = static_cast<Kind>(draw.Below(5));
  std::string out = term;

  if (kind == kVowelSwap) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == 'e' || out[i] == 'a') spots.push_back(i);
    }
    if (spots.empty()) {
      kind = kSubstitute;
    } else {
      char& c = out[spots[draw.Below(spots.size())]];
      c = c == 'e' ? 'a' : 'e';
      return out;
    }
  }
  if (kind == kPhSwap) {
    if (auto p = out.find("ph"); p != std::string::npos) {
      return out.replace(p, 2, "f");
    }
    if (auto f = out.find('f'); f != std::string::npos) {
      return out.replace(f, 1, "ph");
    }
    kind = kSubstitute;
  }
  const std::size_t pos = draw.Below(out.size());
  switch (kind) {
    case kDelete:
      out.erase(pos, 1);
      break;
    case kInsert:
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(draw.Below(out.size() + 1)),
                 kLetters[draw.Below(kLetters.size())]);
      break;
    default: {
      char repl = out[pos];
      while (repl == out[pos]) repl = kLetters[draw.Below(kLetters.size())];
      out[pos] = repl;
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<GoldPair> ParseGoldSet(std::string_view text) {
  std::vector<GoldPair> pairs;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw FormatError("gold line " + std::to_string(line_no) +
                        ": expected noisy<TAB>gold");
    }
    GoldPair p{std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))};
    if (p.noisy.empty() || p.gold.empty()) {
      throw FormatError("gold line " + std::to_string(line_no) + ": empty term");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<GoldPair> LoadGoldSet(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open gold set '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGoldSet(buf.str());
}

std::string SerializeGoldSet(std::span<const GoldPair> pairs) {
  std::string out;
  for (const auto& p : pairs) {
    out += p.noisy;
    out += '\t';
    out += p.gold;
    out += '\n';
  }
  return out;
}

double ReciprocalRank(std::span<const Candidate> ranked, std::string_view gold) {
  const std::size_t r = RankOf(ranked, gold);
  return r == 0 ? 0.0 : 1.0 / static_cast<double>(r);
}

int SuccessAtK(std::span<const Candidate> ranked, std::string_view gold,
               std::size_t k) {
  if (k == 0) throw PreconditionViolated("k must be at least 1");
  const std::size_t r = RankOf(ranked, gold);
  return (r != 0 && r <= k) ? 1 : 0;
}

ModelScores EvaluateModel(std::span<const GoldPair> gold_set,
                          const Vocabulary& vocab, const ModelConfig& config) {
  if (gold_set.empty()) throw EmptyGoldSet();
  std::vector<std::string> missing;
  for (const auto& p : gold_set) {
    if (!vocab.Contains(p.gold) &&
        std::find(missing.begin(), missing.end(), p.gold) == missing.end()) {
      missing.push_back(p.gold);
    }
  }
  if (!missing.empty()) throw GoldTermMissing(std::move(missing));

  std::uint64_t rr_sum = 0;
  std::uint64_t hits1 = 0, hits5 = 0, hits10 = 0;
  for (const auto& p : gold_set) {
    std::vector<Candidate> ranked;
    try {
      ranked = Normalize(p.noisy, vocab, config, kEvalTopK);
    } catch (const PreconditionViolated&) {
      // Rule 1 rules out one-character queries: nothing is retrieved.
    }
    const std::string gold = vocab.Canonicalize(p.gold);
    if (const std::size_t r = RankOf(ranked, gold); r != 0) {
      rr_sum += kRankDenominator / r;
    }
    hits1 += SuccessAtK(ranked, gold, 1);
    hits5 += SuccessAtK(ranked, gold, 5);
    hits10 += SuccessAtK(ranked, gold, 10);
  }

  const auto n = static_cast<double>(gold_set.size());
  ModelScores s;
  s.model = config.model_id;
  s.sample_count = gold_set.size();
  s.avg_mrr = static_cast<double>(rr_sum) / static_cast<double>(kRankDenominator) / n;
  s.avg_p1 = static_cast<double>(hits1) / n;
  s.avg_p5 = static_cast<double>(hits5) / n;
  s.avg_p10 = static_cast<double>(hits10) / n;
  return s;
}

EvalReport CompareModels(std::span<const GoldPair> gold_set,
                         const Vocabulary& vocab) {
  EvalReport report;
  for (ModelId id : kAllModels) {
    report.columns.push_back(EvaluateModel(gold_set, vocab, ModelConfig::Default(id)));
  }
  return report;
}

std::string FormatReport(const EvalReport& report) {
  std::string out = "Measure";
  for (const auto& col : report.columns) {
    out += '\t';
    out += ModelName(col.model);
  }
  out += '\n';
  struct Row {
    const char* name;
    double ModelScores::*field;
  };
  constexpr Row kRows[] = {{"Avg_MRR", &ModelScores::avg_mrr},
                           {"Avg_P@1", &ModelScores::avg_p1},
                           {"Avg_P@5", &ModelScores::avg_p5},
                           {"Avg_P@10", &ModelScores::avg_p10}};
  for (const Row& row : kRows) {
    out += row.name;
    for (const auto& col : report.columns) {
      out += '\t';
      out += FormatCell(col.*row.field);
    }
    out += '\n';
  }
  return out;
}

std::vector<GoldPair> SynthesizeGoldSet(const Vocabulary& vocab,
                                        std::size_t count, std::uint64_t seed) {
  std::vector<const VocabTerm*> pool;
  for (const VocabTerm& t : vocab.terms()) {
    if (t.term.size() >= 4) pool.push_back(&t);
  }
  std::vector<GoldPair> pairs;
  if (pool.empty()) return pairs;

  Draw draw(seed);
  std::set<std::string> used_noisy;
  const std::size_t max_attempts = count * 1000 + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && pairs.size() < count;
       ++attempt) {
    const VocabTerm& source = *pool[draw.Below(pool.size())];
    std::string noisy = Corrupt(source.term, draw);
    if (noisy.size() < kMinTermLength || vocab.Contains(noisy) ||
        !used_noisy.insert(noisy).second) {
      continue;
    }
    pairs.push_back({std::move(noisy), source.term});
  }
  return pairs;
}

}  // namespace translit
