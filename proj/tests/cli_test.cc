//
// Copyright 2026 The Hypobias Authors
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
//

#include "hypobias/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hypobias/partition.h"
#include "hypobias/report.h"
#include "hypobias/string_util.h"
#include "hypobias/tokenizer.h"
#include "json.hpp"
#include "synthetic_corpus.h"

namespace hypobias::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  out << contents;
}

std::string ToSnliJsonl(const CorpusSplit& split, bool add_no_consensus) {
  std::string out;
  for (const SentencePair& pair : split.pairs) {
    nlohmann::json line = {{"gold_label", LabelName(pair.label)},
                           {"sentence1", pair.premise},
                           {"sentence2", pair.hypothesis},
                           {"pairID", pair.id},
                           {"captionID", "ignored"}};
    StrAppend(&out, line.dump(), "\n");
  }
  if (add_no_consensus) {
    StrAppend(
        &out,
        R"({"gold_label": "-", "sentence1": "a", "sentence2": "b", "pairID": "nc"})",
        "\n");
  }
  return out;
}

std::string ToSickTsv(const Corpus& corpus) {
  std::string out =
      "pair_ID\tsentence_A\tsentence_B\tentailment_label\trelatedness_score\t"
      "SemEval_set\n";
  const char* sets[] = {"TRAIN", "TRIAL", "TEST"};
  for (SplitName s : kAllSplits) {
    for (const SentencePair& pair : corpus.split(s).pairs) {
      std::string label(LabelName(pair.label));
      for (char& c : label) c = static_cast<char>(std::toupper(c));
      StrAppend(&out, pair.id, "\t", pair.premise, "\t", pair.hypothesis, "\t",
                label, "\t3.0\t", sets[static_cast<int>(s)], "\n");
    }
  }
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        StrCat("hypobias_cli_",
               ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);

    const Corpus biased = testing::MakeBiasedCorpus(3);
    WriteFile(dir_ / "train.jsonl", ToSnliJsonl(biased.train, true));
    WriteFile(dir_ / "dev.jsonl", ToSnliJsonl(biased.dev, false));
    WriteFile(dir_ / "test.jsonl", ToSnliJsonl(biased.test, true));
    WriteFile(dir_ / "generic_test.jsonl", ToGenericJsonl(biased.test));
    WriteFile(dir_ / "generic_train.jsonl", ToGenericJsonl(biased.train));
    WriteFile(dir_ / "SICK.txt", ToSickTsv(testing::MakeUnbiasedCorpus(4)));
  }

  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  std::string P(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::vector<std::string> SnliArgs(std::string command) const {
    return {std::move(command), "--format",       "snli",
            "--train",          P("train.jsonl"), "--dev",
            P("dev.jsonl"),     "--test",         P("test.jsonl")};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, AuditWritesFixedOutputs) {
  auto args = SnliArgs("audit");
  args.insert(args.end(), {"--out", P("out")});
  ASSERT_EQ(Run(args), kExitOk) << err_.str();
  EXPECT_THAT(out_.str(), HasSubstr("verdict: biased"));
  for (const char* name : {kReportJson, kReportText, kManifestFile}) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / name)) << name;
  }
  EXPECT_FALSE(fs::exists(dir_ / "out" / "report.json.tmp"));

  auto report = ParseReportJson(ReadFile(dir_ / "out" / kReportJson));
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->verdict, Verdict::kBiased);
  EXPECT_EQ(report->corpus_id, "snli");
  EXPECT_EQ(report->source_format, "snli-jsonl");
  auto manifest = ReadManifest((dir_ / "out" / kManifestFile).string());
  ASSERT_TRUE(manifest.ok());
  EXPECT_EQ(report->nb_accuracy, manifest->easy_ratio());
  EXPECT_EQ(manifest->total(), report->test_size);
  EXPECT_EQ(ReadFile(dir_ / "out" / kReportText), out_.str());
}

TEST_F(CliTest, AuditIsDeterministic) {
  auto a = SnliArgs("audit");
  a.insert(a.end(), {"--out", P("a")});
  auto b = SnliArgs("audit");
  b.insert(b.end(), {"--out", P("b")});
  ASSERT_EQ(Run(a), kExitOk);
  ASSERT_EQ(Run(b), kExitOk);
  for (const char* name : {kReportJson, kReportText, kManifestFile}) {
    EXPECT_EQ(ReadFile(dir_ / "a" / name), ReadFile(dir_ / "b" / name));
  }
}

TEST_F(CliTest, AuditOfUnbiasedSickFileIsNotBiased) {
  ASSERT_EQ(Run({"audit", "--format", "sick", "--file", P("SICK.txt"), "--out",
                 P("sick")}),
            kExitOk)
      << err_.str();
  auto report = ParseReportJson(ReadFile(dir_ / "sick" / kReportJson));
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->verdict, Verdict::kNotBiased);
  EXPECT_EQ(report->source_format, "sick-tsv");
}

TEST_F(CliTest, AuditHonorsAlphaAndLevel) {
  auto args = SnliArgs("audit");
  args.insert(args.end(), {"--out", P("o"), "--alpha", "0.5", "--alpha-level",
                           "1e-300", "--corpus-id", "mine"});
  ASSERT_EQ(Run(args), kExitOk) << err_.str();
  auto report = ParseReportJson(ReadFile(dir_ / "o" / kReportJson));
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->smoothing_alpha, 0.5);
  EXPECT_EQ(report->significance_level, 1e-300);
  EXPECT_EQ(report->corpus_id, "mine");
}

TEST_F(CliTest, MissingInputIsADataErrorWithoutPartialOutputs) {
  EXPECT_EQ(Run({"audit", "--format", "snli", "--train", P("missing.jsonl"),
                 "--test", P("test.jsonl"), "--out", P("never")}),
            kExitData);
  EXPECT_THAT(err_.str(), HasSubstr("missing.jsonl"));
  EXPECT_FALSE(fs::exists(dir_ / "never"));
}

TEST_F(CliTest, MalformedInputIsADataError) {
  WriteFile(dir_ / "bad.jsonl", "{\"gold_label\": \"maybe\"}\n");
  EXPECT_EQ(Run({"audit", "--format", "snli", "--train", P("bad.jsonl"),
                 "--test", P("test.jsonl"), "--out", P("never")}),
            kExitData);
  EXPECT_THAT(err_.str(), HasSubstr("maybe"));
  EXPECT_FALSE(fs::exists(dir_ / "never"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({"audit", "--format", "xml", "--out", P("o")}), kExitUsage);
  // Enum values are accepted by name only.
  EXPECT_EQ(Run({"audit", "--format", "0", "--out", P("o")}), kExitUsage);
  EXPECT_EQ(Run({"mask", "--format", "generic", "--test",
                 P("generic_test.jsonl"), "--out", P("o"), "--split", "2"}),
            kExitUsage);
  EXPECT_EQ(Run({"audit", "--format", "snli", "--test", P("test.jsonl"),
                 "--out", P("o")}),
            kExitUsage);
  EXPECT_EQ(Run({"audit", "--format", "sick", "--out", P("o")}), kExitUsage);
  auto args = SnliArgs("audit");
  args.insert(args.end(), {"--out", P("o"), "--alpha", "-1"});
  EXPECT_EQ(Run(args), kExitUsage);
  EXPECT_EQ(
      Run({"mask", "--format", "generic", "--test", P("generic_test.jsonl"),
           "--out", P("o"), "--unk-symbol", "two words"}),
      kExitUsage);
  EXPECT_EQ(Run({"validate", "--format", "generic", "--train",
                 P("generic_train.jsonl"), "--dev", P("generic_test.jsonl"),
                 "--test", P("generic_test.jsonl")}),
            kExitUsage);
  EXPECT_FALSE(fs::exists(dir_ / "o"));
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(Run({"--help"}), kExitOk); }

TEST_F(CliTest, PartitionMatchesAudit) {
  auto audit = SnliArgs("audit");
  audit.insert(audit.end(), {"--out", P("a")});
  ASSERT_EQ(Run(audit), kExitOk);
  auto partition = SnliArgs("partition");
  partition.insert(partition.end(), {"--out", P("p")});
  ASSERT_EQ(Run(partition), kExitOk) << err_.str();
  EXPECT_THAT(out_.str(), HasSubstr("easy (E_e)"));
  EXPECT_EQ(ReadFile(dir_ / "p" / kManifestFile),
            ReadFile(dir_ / "a" / kManifestFile));
}

TEST_F(CliTest, MaskWritesGenericJsonl) {
  ASSERT_EQ(Run({"mask", "--format", "snli", "--test", P("test.jsonl"), "--out",
                 P("m")}),
            kExitOk)
      << err_.str();
  auto masked =
      LoadGenericJsonl((dir_ / "m" / kMaskedFile).string(), SplitName::kTest);
  ASSERT_TRUE(masked.ok()) << masked.status();
  auto original = LoadSnli(P("test.jsonl"), SplitName::kTest);
  ASSERT_TRUE(original.ok());
  ASSERT_EQ(masked->size(), original->split.size());
  for (std::size_t i = 0; i < masked->size(); ++i) {
    EXPECT_EQ(masked->pairs[i].id, original->split.pairs[i].id);
    EXPECT_EQ(masked->pairs[i].hypothesis, original->split.pairs[i].hypothesis);
    EXPECT_EQ(masked->pairs[i].label, original->split.pairs[i].label);
    EXPECT_EQ(CountTokens(masked->pairs[i].premise),
              CountTokens(original->split.pairs[i].premise));
  }
  // Re-masking the masked output changes nothing.
  ASSERT_EQ(Run({"mask", "--format", "generic", "--test", P("m/masked.jsonl"),
                 "--out", P("m2")}),
            kExitOk);
  EXPECT_EQ(ReadFile(dir_ / "m" / kMaskedFile),
            ReadFile(dir_ / "m2" / kMaskedFile));
}

TEST_F(CliTest, MaskCustomSymbolAndSplit) {
  ASSERT_EQ(
      Run({"mask", "--format", "generic", "--train", P("generic_train.jsonl"),
           "--split", "train", "--unk-symbol", "@unk@", "--out", P("m")}),
      kExitOk)
      << err_.str();
  EXPECT_THAT(ReadFile(dir_ / "m" / kMaskedFile), HasSubstr("@unk@ @unk@"));
}

TEST_F(CliTest, StatsWithReferenceCorpus) {
  ASSERT_EQ(Run({"stats", "--format", "sick", "--file", P("SICK.txt"),
                 "--reference-train", P("train.jsonl"), "--out", P("s")}),
            kExitOk)
      << err_.str();
  EXPECT_THAT(out_.str(), HasSubstr("Label distribution"));
  EXPECT_THAT(out_.str(), HasSubstr("Cross-corpus OOV"));
  auto doc = nlohmann::json::parse(ReadFile(dir_ / "s" / kStatsJson));
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_TRUE(doc.contains("cross_corpus_oov"));
  EXPECT_GE(doc["cross_corpus_oov"]["token_ratio"].get<double>(), 0.0);
  EXPECT_TRUE(doc["label_counts"].contains("test"));
}

TEST_F(CliTest, StatsOfTrainAgainstItself) {
  ASSERT_EQ(
      Run({"stats", "--format", "generic", "--test", P("generic_train.jsonl"),
           "--reference-train", P("generic_train.jsonl"), "--reference-format",
           "generic", "--out", P("s")}),
      kExitOk)
      << err_.str();
  auto doc = nlohmann::json::parse(ReadFile(dir_ / "s" / kStatsJson));
  EXPECT_EQ(doc["cross_corpus_oov"]["token_ratio"].get<double>(), 0.0);
}

TEST_F(CliTest, ValidateReportsMismatches) {
  auto args = SnliArgs("validate");
  args.insert(args.end(), {"--out", P("v")});
  ASSERT_EQ(Run(args), kExitOk) << err_.str();
  EXPECT_THAT(out_.str(), HasSubstr("FAIL"));
  auto doc = nlohmann::json::parse(ReadFile(dir_ / "v" / kValidationJson));
  EXPECT_FALSE(doc["all_pass"].get<bool>());
  EXPECT_EQ(doc["cells"].size(), 9u);
}

}  // namespace
}  // namespace hypobias::cli
