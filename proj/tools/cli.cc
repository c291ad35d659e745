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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "smartauth/baseline.h"
#include "smartauth/improved.h"

namespace smartauth::cli {
namespace {

struct RawFlags {
  std::string scheme = "improved";
  std::string scenario = "honest";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  std::string hash = "standard";
  std::string out;
  std::string format = "text";
};

struct FlagOptions {
  CLI::Option* scheme = nullptr;
  CLI::Option* scenario = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* hash = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
};

FlagOptions AddFlags(CLI::App& cmd, RawFlags& flags) {
  FlagOptions o;
  o.scheme = cmd.add_option("--scheme", flags.scheme, "baseline | improved")
                 ->check(CLI::IsMember({"baseline", "improved"}));
  std::vector<std::string> scenarios;
  for (ScenarioId id : kAllScenarios) {
    scenarios.emplace_back(ScenarioName(id));
  }
  o.scenario = cmd.add_option("--scenario", flags.scenario, "scenario id")
                   ->check(CLI::IsMember(scenarios));
  o.seed = cmd.add_option("--seed", flags.seed, "64-bit seed")
               ->envname("SMARTAUTH_SEED");
  o.trials = cmd.add_option("--trials", flags.trials,
                            "number of trials; trial i uses seed+i")
                 ->check(CLI::PositiveNumber);
  o.hash = cmd.add_option("--hash", flags.hash, "standard | toy-8 | toy-16")
               ->check(CLI::IsMember({"standard", "toy-8", "toy-16"}));
  o.out = cmd.add_option("--out", flags.out, "write transcripts to this file");
  o.format = cmd.add_option("--format", flags.format,
                            "text | structured-lines")
                 ->check(CLI::IsMember({"text", "structured-lines"}));
  return o;
}

CliConfig ToConfig(const RawFlags& flags) {
  CliConfig config;
  config.scheme = *ParseScheme(flags.scheme);
  config.scenario = *ParseScenario(flags.scenario);
  config.seed = flags.seed;
  config.trials = flags.trials;
  config.hash.algorithm = *ParseHashAlgorithm(flags.hash);
  if (!flags.out.empty()) config.out_path = flags.out;
  config.format = flags.format == "structured-lines"
                      ? OutputFormat::kStructuredLines
                      : OutputFormat::kText;
  return config;
}

std::string KeyHex(const std::optional<SessionKey>& key) {
  return key ? key->value.hex() : "-";
}

void WriteTrial(const CliConfig& config, std::uint64_t trial,
                const ScenarioRun& run, std::ostream& out) {
  const ScenarioResult& r = run.result;
  if (config.format == OutputFormat::kStructuredLines) {
    out << "# scheme=" << SchemeName(r.scheme)
        << " scenario=" << ScenarioName(r.scenario) << " seed=" << r.seed
        << " trial=" << trial + 1 << '/' << config.trials << '\n';
    out << run.transcript.ToStructuredLines();
    return;
  }
  out << "== " << SchemeName(r.scheme) << " / " << ScenarioName(r.scenario)
      << " / seed " << r.seed << " (trial " << trial + 1 << " of "
      << config.trials << ")\n";
  out << run.transcript.ToText();
  out << "verdict: " << r.verdict.ToString() << '\n';
  out << "messages sent: " << r.messages_sent << '\n';
  if (r.verdict.accepted()) {
    out << "client SK: " << KeyHex(r.client_key) << '\n';
    out << "server SK: " << KeyHex(r.server_key) << '\n';
    out << "keys equal: " << (r.client_key == r.server_key ? "yes" : "NO")
        << '\n';
  }
}

bool TrialReproduces(const Expectation& expected, const ScenarioResult& r) {
  if (!MatchesExpectation(expected, r.verdict)) return false;
  if (r.verdict.accepted()) {
    return r.client_key.has_value() && r.client_key == r.server_key;
  }
  return true;
}

}  // namespace

int RunCommand(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* transcript_out = &out;
  if (config.out_path) {
    file.open(*config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return kExitUsage;
    }
    transcript_out = &file;
  }

  const Expectation expected =
      ExpectedOutcome(config.scheme, config.scenario);
  std::uint64_t reproduced = 0;
  std::uint64_t change_applied = 0;
  std::uint64_t rejected = 0;
  std::map<std::string, std::uint64_t> verdicts;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    ScenarioRun run = RunScenario(config.scheme, config.scenario,
                                  config.seed + trial, config.hash);
    WriteTrial(config, trial, run, *transcript_out);
    const ScenarioResult& r = run.result;
    if (TrialReproduces(expected, r)) ++reproduced;
    if (r.password_change_applied.value_or(false)) ++change_applied;
    if (!r.verdict.accepted()) ++rejected;
    ++verdicts[r.verdict.ToString()];
  }

  // Summary lines are comments in structured-lines mode so the stream stays
  // a sequence of transcript records.
  const char* prefix =
      config.format == OutputFormat::kStructuredLines ? "# " : "";
  const std::string n = std::to_string(config.trials);
  out << prefix << "expected: "
      << (expected.accept ? std::string("accept")
                          : expected.reason
                                ? "reject(" +
                                      std::string(RejectReasonName(
                                          *expected.reason)) +
                                      ")"
                                : std::string("reject"))
      << " -- " << expected.description << '\n';
  for (const auto& [verdict, count] : verdicts) {
    out << prefix << verdict << ": " << count << '/' << n << '\n';
  }
  if (config.scenario == ScenarioId::kWrongPasswordChange) {
    if (config.scheme == Scheme::kBaseline) {
      out << prefix << "card corrupted: subsequent logins rejected: "
          << std::min(change_applied, rejected) << '/' << n << '\n';
    } else {
      out << prefix << "password change rejected: card unchanged: "
          << "subsequent logins accepted: " << config.trials - rejected << '/'
          << n << '\n';
    }
  }
  out << prefix << "reproduced: " << reproduced << '/' << n << '\n';
  if (reproduced != config.trials) {
    err << "error: " << config.trials - reproduced << " of " << n
        << " trials did not reproduce the expected outcome\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int DiffCommand(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const std::set<ScenarioId> expected_divergent = {
      ScenarioId::kWrongPassword, ScenarioId::kWrongPasswordChange};
  bool ok = true;
  char line[160];
  std::snprintf(line, sizeof(line), "%-24s %-16s %-16s %s\n", "scenario",
                "baseline", "improved", "agreement");
  out << line;
  for (ScenarioId scenario : kAllScenarios) {
    std::uint64_t agree = 0;
    std::map<std::pair<std::string, std::string>, std::uint64_t> pairs;
    for (std::uint64_t i = 0; i < config.trials; ++i) {
      const std::uint64_t seed = config.seed + i;
      Verdict b =
          RunScenario(Scheme::kBaseline, scenario, seed, config.hash)
              .result.verdict;
      Verdict m =
          RunScenario(Scheme::kImproved, scenario, seed, config.hash)
              .result.verdict;
      if (b.Class() == m.Class()) ++agree;
      ++pairs[{std::string(b.Class()), std::string(m.Class())}];
    }
    const bool divergent = expected_divergent.contains(scenario);
    const bool scenario_ok =
        divergent ? agree == 0 : agree == config.trials;
    ok = ok && scenario_ok;
    for (const auto& [pair, count] : pairs) {
      std::snprintf(line, sizeof(line), "%-24s %-16s %-16s ",
                    std::string(ScenarioName(scenario)).c_str(),
                    pair.first.c_str(), pair.second.c_str());
      out << line << (pair.first == pair.second ? "agree " : "diverge ")
          << count << '/' << config.trials;
      out << (scenario_ok ? "" : "  UNEXPECTED") << '\n';
    }
  }
  out << "expected divergence: {wrong-password, wrong-password-change}; "
      << (ok ? "observed exactly" : "NOT observed") << '\n';
  if (!ok) {
    err << "error: divergence set differs from the expected set\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int CostCommand(const CliConfig& config, std::ostream& out, std::ostream& err) {
  ScenarioResult base =
      RunScenario(Scheme::kBaseline, ScenarioId::kHashCount, config.seed,
                  config.hash)
          .result;
  ScenarioResult impr =
      RunScenario(Scheme::kImproved, ScenarioId::kHashCount, config.seed,
                  config.hash)
          .result;
  if (!base.verdict.accepted() || !impr.verdict.accepted()) {
    err << "error: honest run did not complete\n";
    return kExitMismatch;
  }
  const HashCounts& b = base.hash_counts;
  const HashCounts& m = impr.hash_counts;

  // Card storage from freshly registered cards of the same user.
  Rng rng(config.seed);
  Hasher hasher(config.hash);
  RegistrationCenter rc{ServerSecrets::Generate(hasher.digest_size(), rng)};
  Bytes id = ToBytes("storage-probe");
  Bytes pw = ToBytes("password");
  Bytes bio = rng.NextBytes(32);
  Rng reg_b(config.seed);
  Rng reg_m(config.seed);
  auto card_b = baseline::Register(id, pw, bio, rc, hasher, reg_b).value();
  auto card_m = improved::Register(id, pw, bio, rc, hasher, reg_m).value();
  const std::size_t storage_b = baseline::StoredBytes(card_b);
  const std::size_t storage_m = improved::StoredBytes(card_m);
  const std::size_t digest = hasher.digest_size();

  char line[160];
  auto row = [&](const char* name, long long vb, long long vm) {
    std::snprintf(line, sizeof(line), "%-34s %10lld %10lld %8lld\n", name, vb,
                  vm, vm - vb);
    out << line;
  };
  std::snprintf(line, sizeof(line), "%-34s %10s %10s %8s\n", "phase (T_h)",
                "baseline", "improved", "delta");
  out << line;
  row("registration", b.registration, m.registration);
  row("login (card)", b.client_login, m.client_login);
  row("authentication (server)", b.server_auth, m.server_auth);
  row("authentication (card)", b.client_verify, m.client_verify);
  row("login+authentication", b.login_auth(), m.login_auth());
  row("biometric gate (not in total)", b.client_biometric, m.client_biometric);
  row("storage (bytes on card)", storage_b, storage_m);
  out << "convention: login+authentication counts every h() call made by the "
         "card and the server after the biometric gate, session keys "
         "included; absolute totals are reported, not asserted\n";

  const long long delta = static_cast<long long>(m.login_auth()) -
                          static_cast<long long>(b.login_auth());
  const bool delta_ok = delta == 2;
  const bool storage_ok = storage_m - storage_b == digest;
  out << "login+authentication delta: " << delta << " (expected 2) "
      << (delta_ok ? "ok" : "MISMATCH") << '\n';
  out << "storage delta: " << storage_m - storage_b << " bytes = "
      << (storage_m - storage_b) / digest << " digest(s) (expected 1) "
      << (storage_ok ? "ok" : "MISMATCH") << '\n';
  if (!delta_ok || !storage_ok) {
    err << "error: cost comparison does not match the expected deltas\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Biometric smart-card authentication protocol harness",
               "smartauth"};
  app.require_subcommand(1);
  RawFlags run_flags, diff_flags, cost_flags;
  CLI::App* run = app.add_subcommand("run", "run one scenario");
  CLI::App* diff =
      app.add_subcommand("diff", "compare both schemes on every scenario");
  CLI::App* cost = app.add_subcommand("cost", "hash-invocation cost table");
  AddFlags(*run, run_flags);
  FlagOptions diff_opts = AddFlags(*diff, diff_flags);
  FlagOptions cost_opts = AddFlags(*cost, cost_flags);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto usage = [&](const std::string& message) {
    err << "usage error: " << message << '\n';
    return kExitUsage;
  };
  try {
    if (run->parsed()) {
      return RunCommand(ToConfig(run_flags), out, err);
    }
    if (diff->parsed()) {
      if (diff_opts.scheme->count() > 0 || diff_opts.scenario->count() > 0) {
        return usage("diff runs both schemes on every scenario; "
                     "--scheme and --scenario are not accepted");
      }
      if (diff_opts.format->count() > 0 || diff_opts.out->count() > 0) {
        return usage("diff prints a report; --format and --out apply to run");
      }
      return DiffCommand(ToConfig(diff_flags), out, err);
    }
    if (cost->parsed()) {
      if (cost_opts.scheme->count() > 0 || cost_opts.scenario->count() > 0 ||
          cost_opts.trials->count() > 0) {
        return usage("cost always compares one honest run of each scheme");
      }
      if (cost_opts.format->count() > 0 || cost_opts.out->count() > 0) {
        return usage("cost prints a table; --format and --out apply to run");
      }
      return CostCommand(ToConfig(cost_flags), out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace smartauth::cli
