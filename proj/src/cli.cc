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
#include <map>
#include <optional>
#include <variant>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fmt/format.h"
#include "hypobias/audit.h"
#include "hypobias/corpus.h"
#include "hypobias/naive_bayes.h"
#include "hypobias/partition.h"
#include "hypobias/report.h"
#include "hypobias/string_util.h"
#include "json.hpp"

namespace hypobias::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

enum class Command { kAudit, kPartition, kMask, kStats, kValidate };

struct AuditConfig {
  SourceFormat format = SourceFormat::kSnliJsonl;
  std::string train_path;
  std::string dev_path;
  std::string test_path;
  std::string file_path;
  double alpha = kDefaultSmoothing;
  double significance_level = kDefaultSignificanceLevel;
  std::string out_dir;
  std::string unk_symbol = std::string(kDefaultUnkSymbol);
  std::string reference_train;
  SourceFormat reference_format = SourceFormat::kSnliJsonl;
  std::string corpus_id;
  SplitName mask_split = SplitName::kTest;
};

// A data error carries exit status 2; usage errors are reported as 1.
struct Failure {
  int code;
  std::string message;
};

Failure DataError(const absl::Status& status) {
  return Failure{kExitData, std::string(status.message())};
}

Failure UsageError(std::string message) {
  return Failure{kExitUsage, std::move(message)};
}

const std::map<std::string, SourceFormat>& FormatNames() {
  static const auto* kNames = new std::map<std::string, SourceFormat>{
      {"snli", SourceFormat::kSnliJsonl},
      {"sick", SourceFormat::kSickTsv},
      {"generic", SourceFormat::kGenericJsonl},
  };
  return *kNames;
}

std::string ShortFormatName(SourceFormat format) {
  for (const auto& [name, value] : FormatNames()) {
    if (value == format) return name;
  }
  return "corpus";
}

struct SplitRequirement {
  bool train = false;
  bool dev = false;
  bool test = false;
};

absl::StatusOr<CorpusSplit> LoadSplitFile(SourceFormat format,
                                          const std::string& path,
                                          SplitName name) {
  if (format == SourceFormat::kSnliJsonl) {
    auto loaded = LoadSnli(path, name);
    if (!loaded.ok()) return loaded.status();
    return std::move(loaded->split);
  }
  return LoadGenericJsonl(path, name);
}

std::variant<Corpus, Failure> LoadCorpus(const AuditConfig& config,
                                         SplitRequirement required) {
  if (config.format == SourceFormat::kSickTsv) {
    if (config.file_path.empty()) {
      return UsageError("--format sick needs --file PATH");
    }
    auto corpus = LoadSick(config.file_path);
    if (!corpus.ok()) return DataError(corpus.status());
    return *std::move(corpus);
  }
  if (!config.file_path.empty()) {
    return UsageError("--file is only valid with --format sick");
  }
  Corpus corpus;
  corpus.source_format = config.format;
  const std::array<std::pair<SplitName, const std::string*>, 3> paths = {{
      {SplitName::kTrain, &config.train_path},
      {SplitName::kDev, &config.dev_path},
      {SplitName::kTest, &config.test_path},
  }};
  const std::array<bool, 3> needed = {required.train, required.dev,
                                      required.test};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& [name, path] = paths[i];
    if (path->empty()) {
      if (needed[i]) {
        return UsageError(StrCat("missing --", SplitNameString(name), " PATH"));
      }
      continue;
    }
    auto split = LoadSplitFile(config.format, *path, name);
    if (!split.ok()) return DataError(split.status());
    corpus.split(name) = *std::move(split);
  }
  return corpus;
}

// Files are staged next to their destination and renamed into place only
// after every output has been produced.
class OutputWriter {
 public:
  explicit OutputWriter(std::string dir) : dir_(std::move(dir)) {}

  void Add(std::string name, std::string contents) {
    files_.emplace_back(std::move(name), std::move(contents));
  }

  absl::Status Commit() {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
      return absl::UnavailableError(
          StrCat("cannot create ", dir_, ": ", ec.message()));
    }
    std::vector<std::pair<fs::path, fs::path>> staged;
    for (const auto& [name, contents] : files_) {
      fs::path final_path = fs::path(dir_) / name;
      fs::path tmp_path = final_path;
      tmp_path += ".tmp";
      std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
      out << contents;
      out.close();
      if (!out) {
        for (const auto& s : staged) fs::remove(s.first, ec);
        fs::remove(tmp_path, ec);
        return absl::UnavailableError(
            StrCat("cannot write ", final_path.string()));
      }
      staged.emplace_back(tmp_path, final_path);
    }
    for (const auto& [tmp, final_path] : staged) {
      fs::rename(tmp, final_path, ec);
      if (ec) {
        return absl::UnavailableError(StrCat("cannot move ", tmp.string(),
                                             " into place: ", ec.message()));
      }
    }
    return absl::OkStatus();
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string CorpusId(const AuditConfig& config) {
  return config.corpus_id.empty() ? ShortFormatName(config.format)
                                  : config.corpus_id;
}

std::optional<Failure> CommitOutputs(OutputWriter& writer) {
  if (absl::Status s = writer.Commit(); !s.ok()) return DataError(s);
  return std::nullopt;
}

std::optional<Failure> RunAuditCommand(const AuditConfig& config,
                                       std::ostream& out) {
  auto loaded = LoadCorpus(config, {.train = true, .test = true});
  if (auto* f = std::get_if<Failure>(&loaded)) return *f;
  const Corpus& corpus = std::get<Corpus>(loaded);

  auto result = RunAudit(
      corpus, AuditOptions{.corpus_id = CorpusId(config),
                           .smoothing_alpha = config.alpha,
                           .significance_level = config.significance_level});
  if (!result.ok()) return DataError(result.status());
  auto manifest = FormatManifest(result->manifest);
  if (!manifest.ok()) return DataError(manifest.status());

  const std::string text = RenderReport(result->report, ReportFormat::kText);
  OutputWriter writer(config.out_dir);
  writer.Add(kReportJson, RenderReport(result->report, ReportFormat::kJson));
  writer.Add(kReportText, text);
  writer.Add(kManifestFile, *std::move(manifest));
  if (auto f = CommitOutputs(writer)) return f;
  out << text;
  return std::nullopt;
}

std::optional<Failure> RunPartitionCommand(const AuditConfig& config,
                                           std::ostream& out) {
  auto loaded = LoadCorpus(config, {.train = true, .test = true});
  if (auto* f = std::get_if<Failure>(&loaded)) return *f;
  const Corpus& corpus = std::get<Corpus>(loaded);

  auto model =
      TrainNb(corpus.train, BuildVocabulary(corpus.train, kHypothesisOnly),
              config.alpha);
  if (!model.ok()) return DataError(model.status());
  const PartitionManifest manifest = PartitionEasyHard(*model, corpus.test);
  auto text = FormatManifest(manifest);
  if (!text.ok()) return DataError(text.status());

  OutputWriter writer(config.out_dir);
  writer.Add(kManifestFile, *std::move(text));
  if (auto f = CommitOutputs(writer)) return f;

  const PartitionSummary summary = SummarizePartition(manifest);
  out << fmt::format("easy (E_e): {} ({:.1f}%)\nhard (H_e): {} ({:.1f}%)\n",
                     summary.easy, 100.0 * summary.easy_ratio(), summary.hard,
                     100.0 * (1.0 - summary.easy_ratio()));
  for (Label label : kAllLabels) {
    const SubsetCounts& c = summary.per_label[LabelIndex(label)];
    out << fmt::format("  {:<14} easy {}  hard {}\n", LabelDisplayName(label),
                       c.easy, c.hard);
  }
  return std::nullopt;
}

std::optional<Failure> RunMaskCommand(const AuditConfig& config,
                                      std::ostream& out) {
  SplitRequirement required;
  required.train = config.mask_split == SplitName::kTrain;
  required.dev = config.mask_split == SplitName::kDev;
  required.test = config.mask_split == SplitName::kTest;
  auto loaded = LoadCorpus(config, required);
  if (auto* f = std::get_if<Failure>(&loaded)) return *f;
  const Corpus& corpus = std::get<Corpus>(loaded);

  auto masked =
      MaskPremises(corpus.split(config.mask_split), config.unk_symbol);
  if (!masked.ok()) return UsageError(std::string(masked.status().message()));
  OutputWriter writer(config.out_dir);
  writer.Add(kMaskedFile, ToGenericJsonl(*masked));
  if (auto f = CommitOutputs(writer)) return f;
  out << "masked " << masked->size() << " "
      << SplitNameString(config.mask_split) << " pairs\n";
  return std::nullopt;
}

std::optional<Failure> RunStatsCommand(const AuditConfig& config,
                                       std::ostream& out) {
  auto loaded = LoadCorpus(config, {});
  if (auto* f = std::get_if<Failure>(&loaded)) return *f;
  const Corpus& corpus = std::get<Corpus>(loaded);

  std::optional<CorpusSplit> reference;
  if (!config.reference_train.empty()) {
    if (config.reference_format == SourceFormat::kSickTsv) {
      auto ref = LoadSick(config.reference_train);
      if (!ref.ok()) return DataError(ref.status());
      reference = std::move(ref->train);
    } else {
      auto ref = LoadSplitFile(config.reference_format, config.reference_train,
                               SplitName::kTrain);
      if (!ref.ok()) return DataError(ref.status());
      reference = *std::move(ref);
    }
  }

  const DescriptiveStats stats = ComputeDescriptiveStats(corpus);
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["corpus_id"] = CorpusId(config);
  ordered_json labels = ordered_json::object();
  out << "Label distribution\n";
  out << fmt::format("  {:<14} {:>18} {:>18} {:>18}\n", "", "Training",
                     "Development", "Test");
  std::array<PerLabel<std::size_t>, 3> histograms;
  for (SplitName s : kAllSplits) {
    histograms[static_cast<std::size_t>(s)] = LabelHistogram(corpus.split(s));
  }
  for (Label label : kAllLabels) {
    out << fmt::format("  {:<14}", LabelDisplayName(label));
    for (SplitName s : kAllSplits) {
      const std::size_t n = corpus.split(s).size();
      const std::size_t c =
          histograms[static_cast<std::size_t>(s)][LabelIndex(label)];
      out << fmt::format(" {:>10} ({:4.1f}%)", c, n == 0 ? 0.0 : 100.0 * c / n);
    }
    out << "\n";
  }
  out << fmt::format("  {:<14}", "Total");
  for (SplitName s : kAllSplits) {
    out << fmt::format(" {:>10}        ", corpus.split(s).size());
    ordered_json per_label = ordered_json::object();
    for (Label label : kAllLabels) {
      per_label[std::string(LabelName(label))] =
          histograms[static_cast<std::size_t>(s)][LabelIndex(label)];
    }
    labels[std::string(SplitNameString(s))] = per_label;
  }
  out << "\n\n";
  doc["label_counts"] = labels;

  out << fmt::format("Premise mean token count       {:.2f}\n",
                     stats.premise_mean_tokens);
  out << fmt::format("Hypothesis mean token count    {:.2f}\n",
                     stats.hypothesis_mean_tokens);
  out << fmt::format("Vocabulary size (train)        {}\n",
                     stats.vocab_size_train);
  out << fmt::format("Vocabulary size (test)         {}\n",
                     stats.vocab_size_test);
  out << fmt::format("OOV ratio of test (tokens)     {:.4f}%\n",
                     100.0 * stats.oov_ratio_test);
  out << fmt::format("OOV ratio of test (types)      {:.4f}%\n",
                     100.0 * stats.oov_type_ratio_test);
  doc["stats"] = {
      {"premise_mean_tokens", stats.premise_mean_tokens},
      {"hypothesis_mean_tokens", stats.hypothesis_mean_tokens},
      {"vocab_size_train", stats.vocab_size_train},
      {"vocab_size_test", stats.vocab_size_test},
      {"oov_ratio_test", stats.oov_ratio_test},
      {"oov_type_ratio_test", stats.oov_type_ratio_test},
  };
  if (reference.has_value()) {
    const double tokens = CrossCorpusOov(corpus.test, *reference);
    const double types = CrossCorpusOovTypes(corpus.test, *reference);
    out << fmt::format("Cross-corpus OOV of test (tokens) {:.4f}%\n",
                       100.0 * tokens);
    out << fmt::format("Cross-corpus OOV of test (types)  {:.4f}%\n",
                       100.0 * types);
    doc["cross_corpus_oov"] = {{"reference_train", config.reference_train},
                               {"token_ratio", tokens},
                               {"type_ratio", types}};
  }
  if (!config.out_dir.empty()) {
    OutputWriter writer(config.out_dir);
    writer.Add(kStatsJson, doc.dump(2) + "\n");
    if (auto f = CommitOutputs(writer)) return f;
  }
  return std::nullopt;
}

std::optional<Failure> RunValidateCommand(const AuditConfig& config,
                                          std::ostream& out) {
  const ReferenceCounts* reference = nullptr;
  if (config.format == SourceFormat::kSnliJsonl) {
    reference = &SnliReferenceCounts();
  } else if (config.format == SourceFormat::kSickTsv) {
    reference = &SickReferenceCounts();
  } else {
    return UsageError("validate needs --format snli or --format sick");
  }
  auto loaded = LoadCorpus(config, {.train = true, .dev = true, .test = true});
  if (auto* f = std::get_if<Failure>(&loaded)) return *f;
  const ValidationReport report =
      ValidateCounts(std::get<Corpus>(loaded), *reference);

  ordered_json cells = ordered_json::array();
  for (const ValidationCell& cell : report.cells) {
    out << fmt::format("{:<4} {:<6} {:<14} expected {:>8} observed {:>8}\n",
                       cell.pass ? "ok" : "FAIL", SplitNameString(cell.split),
                       LabelDisplayName(cell.label), cell.expected,
                       cell.observed);
    cells.push_back({{"split", SplitNameString(cell.split)},
                     {"label", LabelName(cell.label)},
                     {"expected", cell.expected},
                     {"observed", cell.observed},
                     {"pass", cell.pass}});
  }
  out << (report.all_pass()
              ? std::string("all cells match the reference counts\n")
              : StrCat(report.num_failed(), " of ", report.cells.size(),
                       " cells differ from the reference counts\n"));
  if (!config.out_dir.empty()) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["all_pass"] = report.all_pass();
    doc["cells"] = std::move(cells);
    OutputWriter writer(config.out_dir);
    writer.Add(kValidationJson, doc.dump(2) + "\n");
    if (auto f = CommitOutputs(writer)) return f;
  }
  return std::nullopt;
}

// Accepts only the names in `names`, case-insensitively, and rewrites the
// value to the enum's integer form for CLI11's conversion.
template <typename Enum>
CLI::Validator NameValidator(std::map<std::string, Enum> names) {
  return CLI::Validator(
      [names = std::move(names)](std::string& value) -> std::string {
        std::string choices;
        for (const auto& [name, e] : names) {
          if (EqualsIgnoreCase(value, name)) {
            value = std::to_string(static_cast<int>(e));
            return "";
          }
          StrAppend(&choices, choices.empty() ? "" : ", ", name);
        }
        return StrCat("unknown value '", value, "' (expected one of ", choices,
                      ")");
      },
      "");
}

CLI::Validator FormatTransformer() { return NameValidator(FormatNames()); }

void AddCorpusOptions(CLI::App* cmd, AuditConfig* config) {
  cmd->add_option("--format", config->format, "Corpus format")
      ->required()
      ->transform(FormatTransformer())
      ->option_text("snli|sick|generic REQUIRED");
  cmd->add_option("--train", config->train_path, "Training split file");
  cmd->add_option("--dev", config->dev_path, "Development split file");
  cmd->add_option("--test", config->test_path, "Test split file");
  cmd->add_option("--file", config->file_path, "Single SICK distribution file");
  cmd->add_option("--corpus-id", config->corpus_id,
                  "Name used in reports (defaults to the format name)");
}

void AddOutOption(CLI::App* cmd, AuditConfig* config, bool required) {
  auto* opt = cmd->add_option("--out", config->out_dir, "Output directory");
  if (required) opt->required();
}

void AddModelOptions(CLI::App* cmd, AuditConfig* config) {
  cmd->add_option("--alpha", config->alpha, "Additive smoothing")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hypothesis-only bias audit for entailment corpora", "hypobias"};
  app.require_subcommand(1);
  AuditConfig config;
  Command command = Command::kAudit;

  auto* audit = app.add_subcommand(
      "audit",
      "Train the hypothesis-only classifier and test it against the "
      "majority baseline");
  AddCorpusOptions(audit, &config);
  AddModelOptions(audit, &config);
  AddOutOption(audit, &config, /*required=*/true);
  audit
      ->add_option("--alpha-level", config.significance_level,
                   "Significance level for the verdict")
      ->check(CLI::Range(0.0, 1.0));
  audit->callback([&] { command = Command::kAudit; });

  auto* partition = app.add_subcommand(
      "partition", "Split the test set into empirical easy/hard subsets");
  AddCorpusOptions(partition, &config);
  AddModelOptions(partition, &config);
  AddOutOption(partition, &config, /*required=*/true);
  partition->callback([&] { command = Command::kPartition; });

  auto* mask = app.add_subcommand(
      "mask", "Replace every premise word with an unknown-word symbol");
  AddCorpusOptions(mask, &config);
  AddOutOption(mask, &config, /*required=*/true);
  mask->add_option("--unk-symbol", config.unk_symbol, "Unknown-word symbol");
  mask->add_option("--split", config.mask_split, "Split to mask")
      ->transform(NameValidator(
          std::map<std::string, SplitName>{{"train", SplitName::kTrain},
                                           {"dev", SplitName::kDev},
                                           {"test", SplitName::kTest}}))
      ->option_text("train|dev|test");
  mask->callback([&] { command = Command::kMask; });

  auto* stats = app.add_subcommand(
      "stats", "Label distributions and descriptive corpus statistics");
  AddCorpusOptions(stats, &config);
  AddOutOption(stats, &config, /*required=*/false);
  stats->add_option(
      "--reference-train", config.reference_train,
      "Training split of a reference corpus for cross-corpus OOV");
  stats
      ->add_option("--reference-format", config.reference_format,
                   "Format of --reference-train (default snli)")
      ->transform(FormatTransformer())
      ->option_text("snli|sick|generic");
  stats->callback([&] { command = Command::kStats; });

  auto* validate = app.add_subcommand(
      "validate", "Compare label histograms with the official counts");
  AddCorpusOptions(validate, &config);
  AddOutOption(validate, &config, /*required=*/false);
  validate->callback([&] { command = Command::kValidate; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::optional<Failure> failure;
  switch (command) {
    case Command::kAudit:
      failure = RunAuditCommand(config, out);
      break;
    case Command::kPartition:
      failure = RunPartitionCommand(config, out);
      break;
    case Command::kMask:
      failure = RunMaskCommand(config, out);
      break;
    case Command::kStats:
      failure = RunStatsCommand(config, out);
      break;
    case Command::kValidate:
      failure = RunValidateCommand(config, out);
      break;
  }
  if (failure.has_value()) {
    err << "hypobias: " << failure->message << "\n";
    return failure->code;
  }
  return kExitOk;
}

}  // namespace hypobias::cli
