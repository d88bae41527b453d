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

// Writes the bundled desk-scale dataset: a directory of ITRANS-style
// documents and seeded synthetic gold sets derived from its vocabulary.
//
//   make-dataset --out data

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "translit/evaluation.h"
#include "translit/vocabulary.h"

namespace {

namespace fs = std::filesystem;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// ITRANS onsets and vowels; case carries retroflex/long-vowel distinctions.
const std::vector<std::string> kOnsets = {
    "k", "kh", "g", "gh", "ch", "Ch", "j", "jh", "T", "Th", "D", "Dh", "N",
    "t", "th", "d", "dh", "n", "p", "ph", "b", "bh", "m", "y", "r", "l",
    "v", "sh", "Sh", "s", "h", "L", "kSh", "GY", "f", "pr", "tr", "shr"};
const std::vector<std::string> kVowels = {"a", "A", "i", "I", "u", "U",
                                          "e", "ai", "o", "au", "aa", "ee"};
const std::vector<std::string> kCodas = {"", "", "", "", "M", "n", "H", "r"};

// Everyday words from Marathi and Hindi songs, used verbatim.
const std::vector<std::string> kSeedWords = {
    "phule",  "phulen", "gaane",  "gaanee", "kaane",  "shrI",   "gaNeshAya",
    "namaH",  "deva",   "devA",   "maajhaa", "tujhaa", "mana",  "prema",
    "priya",  "sakhe",  "raaja",  "raNI",   "gaava",  "paaNI",  "aabhaaL",
    "chaandaNe", "sooryaa", "dhartI", "pavasaa", "vaaraa", "nadI", "kinaaraa",
    "jivana", "sukha",  "duHkha", "aai",    "baabaa", "bhakti", "viThThala",
    "paanDuranga", "tukaaraama", "dnyaaneshvara", "abhanga", "ovI", "bhaaruDa",
    "powaaDaa", "gazala", "geet",  "sangeet", "taaraa", "raatra", "divasa",
    "mitra",  "kaLII",  "gulaaba", "moti",  "sone",   "chaandI", "hRudaya"};

std::string MakeWord(Draw& draw) {
  std::string w;
  const std::size_t syllables = 2 + draw.Below(3);
  for (std::size_t s = 0; s < syllables; ++s) {
    w += kOnsets[draw.Below(kOnsets.size())];
    w += kVowels[draw.Below(kVowels.size())];
  }
  w += kCodas[draw.Below(kCodas.size())];
  return w;
}

std::vector<std::string> MakeLexicon(Draw& draw, std::size_t size) {
  std::vector<std::string> lexicon = kSeedWords;
  std::set<std::string> seen(lexicon.begin(), lexicon.end());
  while (lexicon.size() < size) {
    std::string w = MakeWord(draw);
    if (seen.insert(w).second) lexicon.push_back(std::move(w));
  }
  return lexicon;
}

// Zipf-like rank sampling by inverse CDF over precomputed weights.
class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double exponent) : cdf_(n) {
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += 1.0 / std::pow(static_cast<double>(i + 1), exponent);
      cdf_[i] = total;
    }
    for (double& c : cdf_) c /= total;
  }
  std::size_t Sample(Draw& draw) const {
    const double u = draw.Unit();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    return it == cdf_.end() ? cdf_.size() - 1
                            : static_cast<std::size_t>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

std::string MakeDocument(std::size_t index, const std::vector<std::string>& lexicon,
                         const ZipfSampler& zipf, Draw& draw) {
  std::string doc = "% song " + std::to_string(index + 1) + "\n#indian\n";
  const std::size_t stanzas = 6 + draw.Below(5);
  for (std::size_t s = 0; s < stanzas; ++s) {
    const std::size_t lines = 2 + draw.Below(3);
    for (std::size_t l = 0; l < lines; ++l) {
      const std::size_t words = 5 + draw.Below(6);
      for (std::size_t w = 0; w < words; ++w) {
        if (w) doc += ' ';
        doc += lexicon[zipf.Sample(draw)];
      }
      doc += l + 1 == lines ? " || " + std::to_string(s + 1) + " ||\n" : " |\n";
    }
    doc += '\n';
  }
  doc += "#endindian\n";
  return doc;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the bundled synthetic ITRANS corpus and gold sets",
               "make-dataset"};
  std::string out_dir;
  std::size_t documents = 60;
  std::size_t lexicon_size = 4000;
  std::uint64_t seed = 20140;
  app.add_option("--out", out_dir, "output directory")->required();
  app.add_option("--documents", documents);
  app.add_option("--lexicon", lexicon_size);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  try {
    Draw draw(seed);
    const std::vector<std::string> lexicon = MakeLexicon(draw, lexicon_size);
    const ZipfSampler zipf(lexicon.size(), 0.9);

    const fs::path corpus = fs::path(out_dir) / "corpus";
    fs::create_directories(corpus);
    for (std::size_t i = 0; i < documents; ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "song_%03zu.itx", i + 1);
      WriteFile(corpus / name, MakeDocument(i, lexicon, zipf, draw));
    }

    const translit::Vocabulary vocab =
        translit::BuildVocabulary(translit::ReadCorpusDirectory(corpus), true);
    std::cout << "terms\t" << vocab.size() << "\ntokens\t" << vocab.total_frequency()
              << '\n';

    const fs::path gold_dir = fs::path(out_dir) / "gold";
    fs::create_directories(gold_dir);
    for (const std::size_t count : {std::size_t{56}, std::size_t{68}}) {
      const auto pairs = translit::SynthesizeGoldSet(vocab, count, seed + count);
      std::string text = "# synthetic gold set: " + std::to_string(pairs.size()) +
                         " seeded corruptions of vocabulary terms\n# noisy\tgold\n";
      text += translit::SerializeGoldSet(pairs);
      WriteFile(gold_dir / ("synthetic_" + std::to_string(count) + ".tsv"), text);
    }
  } catch (const std::exception& e) {
    std::cerr << "make-dataset: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
