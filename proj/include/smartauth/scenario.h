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

#ifndef SMARTAUTH_SCENARIO_H_
#define SMARTAUTH_SCENARIO_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smartauth/actors.h"
#include "smartauth/channel.h"
#include "smartauth/digest.h"
#include "smartauth/hash.h"
#include "smartauth/reject.h"
#include "smartauth/replay_db.h"
#include "smartauth/transcript.h"

namespace smartauth {

enum class Scheme { kBaseline, kImproved };

enum class ScenarioId {
  kHonest,
  kWrongPassword,
  kWrongPasswordChange,
  kCorrectPasswordChange,
  kReplay,
  kTamper,
  kStolenCard,
  kHashCount,
  kDoubleLogin,
};

inline constexpr std::array<ScenarioId, 9> kAllScenarios = {
    ScenarioId::kHonest,         ScenarioId::kWrongPassword,
    ScenarioId::kWrongPasswordChange, ScenarioId::kCorrectPasswordChange,
    ScenarioId::kReplay,         ScenarioId::kTamper,
    ScenarioId::kStolenCard,     ScenarioId::kHashCount,
    ScenarioId::kDoubleLogin,
};

std::string_view SchemeName(Scheme scheme);
std::optional<Scheme> ParseScheme(std::string_view name);
std::string_view ScenarioName(ScenarioId scenario);
std::optional<ScenarioId> ParseScenario(std::string_view name);

class UnknownScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws UnknownScenarioError.
ScenarioId ScenarioFromName(std::string_view name);

struct Verdict {
  std::optional<RejectReason> reject;  // empty means accept

  static Verdict Accept() { return {}; }
  static Verdict Reject(RejectReason reason) { return {reason}; }

  bool accepted() const { return !reject.has_value(); }
  // "accept" or "reject(<reason>)".
  std::string ToString() const;
  // "accept", "local-reject", "server-reject" or "client-reject".
  std::string_view Class() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Hash invocations attributed to phases and sides.
struct HashCounts {
  std::uint64_t registration = 0;
  std::uint64_t client_login = 0;
  std::uint64_t server_auth = 0;
  std::uint64_t client_verify = 0;
  std::uint64_t password_change = 0;
  std::uint64_t client_biometric = 0;  // fresh-sample hashes at the card

  std::uint64_t client() const { return client_login + client_verify; }
  std::uint64_t server() const { return server_auth; }
  // Login plus authentication, both sides, biometric gate excluded.
  std::uint64_t login_auth() const { return client() + server(); }
};

struct ScenarioResult {
  Scheme scheme = Scheme::kImproved;
  ScenarioId scenario = ScenarioId::kHonest;
  std::uint64_t seed = 0;

  Verdict verdict;
  // Verdict of every login attempt and every extra (replayed or injected)
  // server delivery, in order.
  std::vector<Verdict> attempts;
  std::size_t messages_sent = 0;  // honest sends on the channel
  HashCounts hash_counts;
  std::optional<SessionKey> client_key;  // present iff accepted
  std::optional<SessionKey> server_key;
  ReplayDb replay_db;
  // stolen-card on the improved scheme: e_i xor r_i == h(ID_i || X_s).
  std::optional<bool> extraction_matches;
  // password-change scenarios: whether the card accepted the change.
  std::optional<bool> password_change_applied;
  // The run's long-term secrets, for audits such as checking that they never
  // appear in the transcript. Never serialized.
  ServerSecrets secrets;
};

struct ScenarioRun {
  Transcript transcript;
  ScenarioResult result;
};

// Registers a fresh user derived from `seed`, then plays the scripted phases
// of `scenario` through an adversarial channel. Deterministic in all inputs.
ScenarioRun RunScenario(Scheme scheme, ScenarioId scenario, std::uint64_t seed,
                        HashConfig hash = {});

// One honest login with the given attacker on the channel.
ScenarioRun RunLoginUnderPolicy(Scheme scheme, std::uint64_t seed,
                                const AdversaryPolicy& policy,
                                HashConfig hash = {});

// The documented outcome each scenario reproduces.
struct Expectation {
  bool accept = false;
  // Required reject reason; empty with accept == false means any rejection.
  std::optional<RejectReason> reason;
  std::string description;
};

Expectation ExpectedOutcome(Scheme scheme, ScenarioId scenario);
bool MatchesExpectation(const Expectation& expected, const Verdict& verdict);

}  // namespace smartauth

#endif  // SMARTAUTH_SCENARIO_H_
