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

#include "translit/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "translit/errors.h"
#include "translit/evaluation.h"
#include "translit/rules.h"
#include "translit/vocabulary.h"

namespace translit {
namespace {

struct BuildVocabArgs {
  std::string corpus;
  std::string out;
  bool preserve_case = false;
};

struct ModelArgs {
  std::string model = "m3";
  bool model_given = false;
  int eq = 0;
  std::string config;
};

struct NormalizeArgs {
  std::string vocab;
  std::string term;
  std::size_t top = 10;
  ModelArgs model;
};

struct EvaluateArgs {
  std::string vocab;
  std::string gold;
  std::string out;
  ModelArgs model;
};

void AddModelOptions(CLI::App* cmd, ModelArgs& args) {
  cmd->add_option("--model", args.model, "m1|m2|m3|m4 (default m3)")
      ->check(CLI::IsMember({"m1", "m2", "m3", "m4"}, CLI::ignore_case))
      ->each([&args](const std::string&) { args.model_given = true; });
  cmd->add_option("--eq", args.eq, "proxy-weight equation for M2-M4")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--config", args.config, "key=value rule-weight overrides");
}

// Flags win over the config file, which wins over the model defaults.
ModelConfig ResolveModelArgs(const ModelArgs& args) {
  ConfigOverrides overrides;
  if (!args.config.empty()) overrides = LoadConfigOverrides(args.config);
  ModelId id = ModelId::kM3;
  if (args.model_given) {
    id = *ParseModelId(args.model);
  } else if (overrides.model) {
    id = *overrides.model;
  }
  if (args.eq == 1) overrides.eq = EqVariant::kEq1;
  if (args.eq == 2) overrides.eq = EqVariant::kEq2;
  return ResolveConfig(id, overrides);
}

std::string Fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot write '" + path + "'");
  f << text;
  f.flush();
  if (!f) throw IoFailure("error writing '" + path + "'");
}

int CmdBuildVocab(const BuildVocabArgs& args, std::ostream& out) {
  const std::vector<std::string> docs = ReadCorpusDirectory(args.corpus);
  const Vocabulary vocab = BuildVocabulary(docs, !args.preserve_case);
  SaveVocabulary(vocab, args.out);
  out << "terms\t" << vocab.size() << '\n'
      << "tokens\t" << vocab.total_frequency() << '\n';
  return kExitOk;
}

int CmdNormalize(const NormalizeArgs& args, std::ostream& out, std::ostream& err) {
  const Vocabulary vocab = LoadVocabulary(args.vocab);
  const ModelConfig config = ResolveModelArgs(args.model);
  std::vector<Candidate> ranked;
  try {
    ranked = Normalize(args.term, vocab, config, args.top);
  } catch (const PreconditionViolated& e) {
    err << "invalid term: " << e.what()
        << " (terms of one character are never normalized)\n";
    return kExitInvalidTerm;
  }
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    out << (i + 1) << '\t' << ranked[i].term << '\t' << Fixed6(ranked[i].score())
        << '\t' << ranked[i].edit_distance.value << '\n';
  }
  return kExitOk;
}

int CmdEvaluate(const EvaluateArgs& args, bool all_models, std::ostream& out) {
  const Vocabulary vocab = LoadVocabulary(args.vocab);
  const std::vector<GoldPair> gold = LoadGoldSet(args.gold);
  EvalReport report;
  if (all_models) {
    report = CompareModels(gold, vocab);
  } else {
    report.columns.push_back(EvaluateModel(gold, vocab, ResolveModelArgs(args.model)));
  }
  const std::string text = FormatReport(report);
  WriteTextFile(args.out, text);
  out << text;
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Normalize noisy transliterated terms against an ITRANS vocabulary",
               "translit-norm"};
  app.require_subcommand(1, 1);

  BuildVocabArgs build;
  auto* build_cmd = app.add_subcommand("build-vocab", "build a vocabulary file from a corpus directory");
  build_cmd->add_option("--corpus", build.corpus, "directory of plain-text documents")->required();
  build_cmd->add_option("--out", build.out, "vocabulary file to write")->required();
  build_cmd->add_flag("--preserve-case", build.preserve_case, "keep ITRANS case distinctions");

  NormalizeArgs norm;
  auto* norm_cmd = app.add_subcommand("normalize", "rank vocabulary candidates for one term");
  norm_cmd->add_option("--vocab", norm.vocab)->required();
  norm_cmd->add_option("--term", norm.term)->required();
  norm_cmd->add_option("--top", norm.top, "number of candidates (default 10)")
      ->check(CLI::PositiveNumber);
  AddModelOptions(norm_cmd, norm.model);

  EvaluateArgs eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "score one model against a gold set");
  eval_cmd->add_option("--vocab", eval.vocab)->required();
  eval_cmd->add_option("--gold", eval.gold)->required();
  eval_cmd->add_option("--out", eval.out)->required();
  AddModelOptions(eval_cmd, eval.model);

  EvaluateArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "score M1..M4 against a gold set");
  cmp_cmd->add_option("--vocab", cmp.vocab)->required();
  cmp_cmd->add_option("--gold", cmp.gold)->required();
  cmp_cmd->add_option("--out", cmp.out)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "translit-norm: " << e.what() << '\n';
    return kExitIoOrFormat;
  }

  try {
    if (build_cmd->parsed()) return CmdBuildVocab(build, out);
    if (norm_cmd->parsed()) return CmdNormalize(norm, out, err);
    if (eval_cmd->parsed()) return CmdEvaluate(eval, false, out);
    if (cmp_cmd->parsed()) return CmdEvaluate(cmp, true, out);
  } catch (const GoldTermMissing& e) {
    err << "translit-norm: " << e.what() << '\n';
    return kExitGoldMismatch;
  } catch (const Error& e) {
    err << "translit-norm: " << e.what() << '\n';
    return kExitIoOrFormat;
  }
  return kExitIoOrFormat;
}

}  // namespace translit
