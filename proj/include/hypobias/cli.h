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

#ifndef HYPOBIAS_CLI_H_
#define HYPOBIAS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hypobias::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Fixed output file names under --out.
inline constexpr char kReportJson[] = "report.json";
inline constexpr char kReportText[] = "report.txt";
inline constexpr char kManifestFile[] = "partition.txt";
inline constexpr char kMaskedFile[] = "masked.jsonl";
inline constexpr char kStatsJson[] = "stats.json";
inline constexpr char kValidationJson[] = "validation.json";

// Runs one subcommand (audit, partition, mask, stats, validate). `args`
// excludes the program name. Returns the process exit status.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hypobias::cli

#endif  // HYPOBIAS_CLI_H_
