/*
 * Copyright 2026 The smartauth Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SMARTAUTH_TOOLS_CLI_H_
#define SMARTAUTH_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smartauth/hash.h"
#include "smartauth/scenario.h"

namespace smartauth::cli {

enum class OutputFormat { kText, kStructuredLines };

struct CliConfig {
  Scheme scheme = Scheme::kImproved;
  ScenarioId scenario = ScenarioId::kHonest;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  HashConfig hash;
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::kText;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (args[0] is the program name) and dispatches to a
// subcommand. Returns the process exit status.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

// Exit 0 iff every trial reproduces the scenario's documented outcome.
int RunCommand(const CliConfig& config, std::ostream& out, std::ostream& err);

// Runs every scenario under both schemes for seeds seed..seed+trials-1. Exit 0
// iff the schemes diverge exactly on wrong-password and wrong-password-change.
int DiffCommand(const CliConfig& config, std::ostream& out, std::ostream& err);

// Per-phase hash counts for an honest run of each scheme. Exit 0 iff the
// login+authentication delta is 2 and the card storage delta is one digest.
int CostCommand(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace smartauth::cli

#endif  // SMARTAUTH_TOOLS_CLI_H_
