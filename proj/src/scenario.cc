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

#include "smartauth/scenario.h"

#include <string>
#include <type_traits>
#include <utility>

#include "smartauth/actors.h"
#include "smartauth/baseline.h"
#include "smartauth/improved.h"
#include "smartauth/rng.h"

namespace smartauth {
namespace {

constexpr std::size_t kBiometricSize = 32;

struct SchemeEntry {
  Scheme scheme;
  std::string_view name;
};
constexpr std::array<SchemeEntry, 2> kSchemes = {{
    {Scheme::kBaseline, "baseline"},
    {Scheme::kImproved, "improved"},
}};

struct ScenarioEntry {
  ScenarioId id;
  std::string_view name;
};
constexpr std::array<ScenarioEntry, 9> kScenarioNames = {{
    {ScenarioId::kHonest, "honest"},
    {ScenarioId::kWrongPassword, "wrong-password"},
    {ScenarioId::kWrongPasswordChange, "wrong-password-change"},
    {ScenarioId::kCorrectPasswordChange, "correct-password-change"},
    {ScenarioId::kReplay, "replay"},
    {ScenarioId::kTamper, "tamper"},
    {ScenarioId::kStolenCard, "stolen-card"},
    {ScenarioId::kHashCount, "hash-count"},
    {ScenarioId::kDoubleLogin, "double-login"},
}};

// Uniform-call adapters over the two scheme namespaces.
struct BaselineOps {
  static constexpr Scheme kScheme = Scheme::kBaseline;
  using Card = baseline::Card;
  using LoginMessage = baseline::LoginMessage;
  using AuthResponse = baseline::AuthResponse;
  using ClientSession = baseline::ClientSession;

  static auto Register(ByteView id, ByteView pw, ByteView bio,
                       const RegistrationCenter& rc, Hasher& h, Rng& rng) {
    return baseline::Register(id, pw, bio, rc, h, rng);
  }
  static auto BeginLogin(const Card& card, ByteView bio, ByteView pw,
                         ByteView id, Hasher& h, Rng& rng) {
    return baseline::BeginLogin(card, bio, pw, id, h, rng);
  }
  static auto Authenticate(ServerState& server, const LoginMessage& m,
                           Hasher& h, Rng& rng) {
    return baseline::Authenticate(server, m, h, rng);
  }
  static auto VerifyServer(ClientSession& s, const Card& card,
                           const AuthResponse& r, ByteView sid, Hasher& h) {
    return baseline::VerifyServer(s, card, r, sid, h);
  }
  static auto ChangePassword(const Card& card, ByteView bio, ByteView old_pw,
                             ByteView new_pw, Hasher& h) {
    return baseline::ChangePassword(card, bio, old_pw, new_pw, h);
  }
  // Card contents minus y, which must never reach a transcript.
  static FieldMap CardFields(const Card& card) {
    return {{"N", ToHex(card.n)}, {"e_i", card.e.hex()}, {"f_i", card.f.hex()}};
  }
};

struct ImprovedOps {
  static constexpr Scheme kScheme = Scheme::kImproved;
  using Card = improved::Card;
  using LoginMessage = improved::LoginMessage;
  using AuthResponse = improved::AuthResponse;
  using ClientSession = improved::ClientSession;

  static auto Register(ByteView id, ByteView pw, ByteView bio,
                       const RegistrationCenter& rc, Hasher& h, Rng& rng) {
    return improved::Register(id, pw, bio, rc, h, rng);
  }
  static auto BeginLogin(const Card& card, ByteView bio, ByteView pw,
                         ByteView id, Hasher& h, Rng& rng) {
    return improved::BeginLogin(card, bio, pw, id, h, rng);
  }
  static auto Authenticate(ServerState& server, const LoginMessage& m,
                           Hasher& h, Rng& rng) {
    return improved::Authenticate(server, m, h, rng);
  }
  static auto VerifyServer(ClientSession& s, const Card& card,
                           const AuthResponse& r, ByteView sid, Hasher& h) {
    return improved::VerifyServer(s, card, r, sid, h);
  }
  static auto ChangePassword(const Card& card, ByteView bio, ByteView old_pw,
                             ByteView new_pw, Hasher& h) {
    return improved::ChangePassword(card, bio, old_pw, new_pw, h);
  }
  static FieldMap CardFields(const Card& card) {
    return {{"N", ToHex(card.n)},
            {"e_i", card.e.hex()},
            {"f_i", card.f.hex()},
            {"r_i", card.r.hex()}};
  }
};

Bytes RandomToken(Rng& rng, std::size_t n) {
  static constexpr std::string_view kAlphabet =
      "abcdefghijklmnopqrstuvwxyz0123456789";
  Bytes out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(static_cast<std::uint8_t>(
        kAlphabet[rng.Uniform(kAlphabet.size())]));
  }
  return out;
}

Bytes Prefixed(std::string_view prefix, Bytes token) {
  Bytes out = ToBytes(prefix);
  out.insert(out.end(), token.begin(), token.end());
  return out;
}

// Printable passwords of 8-16 characters.
Bytes RandomPassword(Rng& rng) {
  Bytes out(8 + rng.Uniform(9));
  for (auto& c : out) c = static_cast<std::uint8_t>(0x21 + rng.Uniform(94));
  return out;
}

Bytes DifferentPassword(Rng& rng, const Bytes& other) {
  Bytes candidate;
  do {
    candidate = RandomPassword(rng);
  } while (candidate == other);
  return candidate;
}

std::string RejectLabel(RejectReason reason) {
  return "reject(" + std::string(RejectReasonName(reason)) + ")";
}

Actor ActorFor(RejectReason reason) {
  return SideOf(reason) == RejectSide::kServer ? Actor::kServer
                                               : Actor::kClient;
}

// Everything derived from the scenario seed. Draw order is fixed and does not
// depend on the scheme, so both schemes see the same user for a given seed.
struct Setup {
  explicit Setup(std::uint64_t seed, std::size_t digest_size) : rng(seed) {
    secrets = ServerSecrets::Generate(digest_size, rng);
    sid = Prefixed("server-", RandomToken(rng, 4));
    id = Prefixed("user-", RandomToken(rng, 8));
    password = RandomPassword(rng);
    biometric = rng.NextBytes(kBiometricSize);
    wrong_password = DifferentPassword(rng, password);
    new_password = DifferentPassword(rng, password);
    attacker_biometric = rng.NextBytes(kBiometricSize);
    registration_rng = rng.Fork();
    client_rng = rng.Fork();
    server_rng = rng.Fork();
    adversary_rng = rng.Fork();
  }

  Rng rng;
  ServerSecrets secrets;
  Bytes sid;
  Bytes id;
  Bytes password;
  Bytes biometric;
  Bytes wrong_password;
  Bytes new_password;
  Bytes attacker_biometric;
  Rng registration_rng{0};
  Rng client_rng{0};
  Rng server_rng{0};
  Rng adversary_rng{0};
};

struct AttemptOutcome {
  Verdict verdict;
  std::optional<SessionKey> client_key;
  std::optional<SessionKey> server_key;
};

template <typename Ops>
class Runner {
 public:
  using Card = typename Ops::Card;
  using ClientSession = typename Ops::ClientSession;

  Runner(ScenarioId scenario, std::uint64_t seed, HashConfig hash)
      : setup_(seed, hash.digest_size()),
        rc_hasher_(hash),
        client_hasher_(hash),
        server_hasher_(hash),
        harness_hasher_(HashConfig{hash.algorithm, false}) {
    result_.scheme = Ops::kScheme;
    result_.scenario = scenario;
    result_.seed = seed;
    server_.secrets = setup_.secrets;
    server_.sid = setup_.sid;
  }

  void Register() {
    RegistrationCenter rc{setup_.secrets};
    auto card = Ops::Register(setup_.id, setup_.password, setup_.biometric,
                              rc, rc_hasher_, setup_.registration_rng);
    // Setup IDs are generated well-formed.
    card_ = std::move(card).value();
    result_.hash_counts.registration = rc_hasher_.counter().count;
    FieldMap fields = Ops::CardFields(card_);
    fields.emplace("ID_i", ToHex(setup_.id));
    transcript_.Record(Actor::kRegistrationCenter, EventKind::kSend,
                       std::move(fields), "secure-channel");
  }

  // One login attempt through `channel`, including every extra server
  // delivery the adversary causes.
  AttemptOutcome Attempt(AdversarialChannel& channel, ByteView password,
                         ByteView biometric) {
    auto before = client_hasher_.counter().count;
    auto login = Ops::BeginLogin(card_, biometric, password, setup_.id,
                                 client_hasher_, setup_.client_rng);
    result_.hash_counts.client_login += client_hasher_.counter().count - before;
    if (!login.ok()) {
      transcript_.Record(Actor::kClient, EventKind::kVerify, {},
                         RejectLabel(login.reason()));
      AttemptOutcome out{Verdict::Reject(login.reason()), {}, {}};
      result_.attempts.push_back(out.verdict);
      return out;
    }
    ClientSession session = login->session;
    channel.Send(Actor::kClient, Actor::kServer, login->message);
    return Deliver(channel, &session);
  }

  // Serves every message queued for the server. The first delivery answers
  // `session` (when non-null); later ones are extra attempts.
  AttemptOutcome Deliver(AdversarialChannel& channel, ClientSession* session) {
    std::optional<AttemptOutcome> primary;
    std::vector<Verdict> extras;
    while (channel.HasPending(Actor::kServer)) {
      WireMessage message = *channel.Receive(Actor::kServer);
      AttemptOutcome outcome = ServeOne(channel, message, session);
      if (!primary && session != nullptr) {
        primary = outcome;
        session = nullptr;
      } else {
        extras.push_back(outcome.verdict);
      }
    }
    if (!primary) {
      primary = AttemptOutcome{Verdict::Reject(RejectReason::kNoResponse),
                               {}, {}};
      if (!extras.empty()) {
        // Only adversary traffic reached the server.
        primary->verdict = extras.front();
        extras.erase(extras.begin());
      } else {
        transcript_.Record(Actor::kClient, EventKind::kVerify, {},
                           RejectLabel(RejectReason::kNoResponse));
      }
    }
    result_.attempts.push_back(primary->verdict);
    result_.attempts.insert(result_.attempts.end(), extras.begin(),
                            extras.end());
    last_extras_ = std::move(extras);
    return *primary;
  }

  const std::vector<Verdict>& last_extras() const { return last_extras_; }

  AttemptOutcome ServeOne(AdversarialChannel& channel,
                          const WireMessage& message, ClientSession* session) {
    const auto* login = std::get_if<typename Ops::LoginMessage>(&message);
    if (login == nullptr) {
      transcript_.Record(Actor::kServer, EventKind::kVerify, {},
                         RejectLabel(RejectReason::kMalformedId));
      return {Verdict::Reject(RejectReason::kMalformedId), {}, {}};
    }
    auto before = server_hasher_.counter().count;
    auto accept = Ops::Authenticate(server_, *login, server_hasher_,
                                    setup_.server_rng);
    result_.hash_counts.server_auth += server_hasher_.counter().count - before;
    if (!accept.ok()) {
      transcript_.Record(Actor::kServer, EventKind::kVerify, {},
                         RejectLabel(accept.reason()));
      return {Verdict::Reject(accept.reason()), {}, {}};
    }
    transcript_.Record(Actor::kServer, EventKind::kVerify, {}, "ok");
    SessionKey server_key = accept->session.key;
    transcript_.Record(Actor::kServer, EventKind::kKeyDerived,
                       {{"SK", server_key.value.hex()}});
    channel.Send(Actor::kServer, Actor::kClient, accept->response);

    if (session == nullptr) {
      // Nobody is waiting for this response.
      while (channel.HasPending(Actor::kClient)) {
        channel.Receive(Actor::kClient);
        transcript_.Record(Actor::kClient, EventKind::kVerify, {},
                           "ignored-unsolicited");
      }
      return {Verdict::Accept(), {}, server_key};
    }
    if (!channel.HasPending(Actor::kClient)) {
      transcript_.Record(Actor::kClient, EventKind::kVerify, {},
                         RejectLabel(RejectReason::kNoResponse));
      return {Verdict::Reject(RejectReason::kNoResponse), {}, {}};
    }
    WireMessage reply = *channel.Receive(Actor::kClient);
    const auto* response = std::get_if<typename Ops::AuthResponse>(&reply);
    if (response == nullptr) {
      transcript_.Record(Actor::kClient, EventKind::kVerify, {},
                         RejectLabel(RejectReason::kNoResponse));
      return {Verdict::Reject(RejectReason::kNoResponse), {}, {}};
    }
    before = client_hasher_.counter().count;
    auto key = Ops::VerifyServer(*session, card_, *response, server_.sid,
                                 client_hasher_);
    result_.hash_counts.client_verify += client_hasher_.counter().count - before;
    if (!key.ok()) {
      transcript_.Record(Actor::kClient, EventKind::kVerify, {},
                         RejectLabel(key.reason()));
      return {Verdict::Reject(key.reason()), {}, {}};
    }
    transcript_.Record(Actor::kClient, EventKind::kVerify, {}, "ok");
    transcript_.Record(Actor::kClient, EventKind::kKeyDerived,
                       {{"SK", key->value.hex()}});
    return {Verdict::Accept(), *key, server_key};
  }

  bool ChangePassword(ByteView old_password, ByteView new_password) {
    auto before = client_hasher_.counter().count;
    auto updated = Ops::ChangePassword(card_, setup_.biometric, old_password,
                                       new_password, client_hasher_);
    result_.hash_counts.password_change +=
        client_hasher_.counter().count - before;
    if (!updated.ok()) {
      transcript_.Record(Actor::kClient, EventKind::kVerify, {},
                         RejectLabel(updated.reason()));
      result_.password_change_applied = false;
      return false;
    }
    card_ = std::move(updated).value();
    transcript_.Record(Actor::kClient, EventKind::kVerify,
                       Ops::CardFields(card_), "password-change-applied");
    result_.password_change_applied = true;
    return true;
  }

  ScenarioRun Finish(const AttemptOutcome& final, std::size_t messages_sent) {
    result_.verdict = final.verdict;
    result_.messages_sent = messages_sent;
    result_.hash_counts.client_biometric = client_hasher_.counter().biometric;
    result_.replay_db = server_.replay_db;
    result_.secrets = setup_.secrets;
    if (final.verdict.accepted()) {
      result_.client_key = final.client_key;
      result_.server_key = final.server_key;
      FieldMap keys;
      if (final.client_key) keys.emplace("client_SK", final.client_key->value.hex());
      if (final.server_key) keys.emplace("server_SK", final.server_key->value.hex());
      transcript_.Record(Actor::kHarness, EventKind::kAccept, std::move(keys),
                         "accept");
    } else {
      transcript_.Record(ActorFor(*final.verdict.reject), EventKind::kReject,
                         {}, final.verdict.ToString());
    }
    return ScenarioRun{std::move(transcript_), std::move(result_)};
  }

  ScenarioRun Play(ScenarioId scenario) {
    Register();
    switch (scenario) {
      case ScenarioId::kHonest:
        return PlayHonest();
      case ScenarioId::kHashCount:
        return PlayHashCount();
      case ScenarioId::kWrongPassword:
        return PlayWrongPassword();
      case ScenarioId::kWrongPasswordChange:
        return PlayWrongPasswordChange();
      case ScenarioId::kCorrectPasswordChange:
        return PlayCorrectPasswordChange();
      case ScenarioId::kReplay:
        return PlayReplay();
      case ScenarioId::kTamper:
        return PlayTamper();
      case ScenarioId::kStolenCard:
        return PlayStolenCard();
      case ScenarioId::kDoubleLogin:
        return PlayDoubleLogin();
    }
    throw UnknownScenarioError("unhandled scenario");
  }

  ScenarioRun PlayUnderPolicy(const AdversaryPolicy& policy) {
    Register();
    AdversarialChannel channel(policy, transcript_);
    AttemptOutcome outcome = Attempt(channel, setup_.password, setup_.biometric);
    return Finish(outcome, channel.honest_sends());
  }

 private:
  ScenarioRun PlayHonest() {
    AdversarialChannel channel(adversary::Passive{}, transcript_);
    AttemptOutcome outcome = Attempt(channel, setup_.password, setup_.biometric);
    return Finish(outcome, channel.honest_sends());
  }

  ScenarioRun PlayHashCount() {
    AdversarialChannel channel(adversary::Passive{}, transcript_);
    AttemptOutcome outcome = Attempt(channel, setup_.password, setup_.biometric);
    const HashCounts& c = result_.hash_counts;
    transcript_.Record(
        Actor::kHarness, EventKind::kVerify, {},
        "hashes:client-login=" + std::to_string(c.client_login) +
            ",server-auth=" + std::to_string(c.server_auth) +
            ",client-verify=" + std::to_string(c.client_verify) +
            ",login-auth-total=" + std::to_string(c.login_auth()));
    return Finish(outcome, channel.honest_sends());
  }

  ScenarioRun PlayWrongPassword() {
    AdversarialChannel channel(adversary::Passive{}, transcript_);
    AttemptOutcome outcome =
        Attempt(channel, setup_.wrong_password, setup_.biometric);
    return Finish(outcome, channel.honest_sends());
  }

  // The user mistypes the old password while changing it. If the card took
  // the change, the user logs in with the new password and then retries with
  // the old one; otherwise the user keeps logging in with the unchanged one.
  ScenarioRun PlayWrongPasswordChange() {
    AdversarialChannel channel(adversary::Passive{}, transcript_);
    AttemptOutcome outcome;
    if (ChangePassword(setup_.wrong_password, setup_.new_password)) {
      outcome = Attempt(channel, setup_.new_password, setup_.biometric);
      if (!outcome.verdict.accepted()) {
        outcome = Attempt(channel, setup_.password, setup_.biometric);
      }
    } else {
      outcome = Attempt(channel, setup_.password, setup_.biometric);
    }
    return Finish(outcome, channel.honest_sends());
  }

  ScenarioRun PlayCorrectPasswordChange() {
    AdversarialChannel channel(adversary::Passive{}, transcript_);
    AttemptOutcome outcome;
    if (ChangePassword(setup_.password, setup_.new_password)) {
      outcome = Attempt(channel, setup_.new_password, setup_.biometric);
    } else {
      outcome = AttemptOutcome{Verdict::Reject(RejectReason::kWrongOldPassword),
                               {}, {}};
    }
    return Finish(outcome, channel.honest_sends());
  }

  // The honest login goes through; the verbatim copy decides the verdict.
  ScenarioRun PlayReplay() {
    AdversarialChannel channel(adversary::Replay{MessageKind::kLogin, 1},
                               transcript_);
    AttemptOutcome outcome = Attempt(channel, setup_.password, setup_.biometric);
    if (outcome.verdict.accepted() && !last_extras_.empty()) {
      outcome = AttemptOutcome{last_extras_.front(), {}, {}};
    }
    return Finish(outcome, channel.honest_sends());
  }

  ScenarioRun PlayTamper() {
    Rng& rng = setup_.adversary_rng;
    adversary::Tamper tamper;
    tamper.target =
        rng.Uniform(2) == 0 ? MessageKind::kLogin : MessageKind::kResponse;
    WireMessage shape = SampleMessage(tamper.target);
    std::vector<std::string> fields = FieldNames(shape);
    tamper.field = fields[rng.Uniform(fields.size())];
    tamper.bit = rng.Uniform(FieldBits(shape, tamper.field));
    AdversarialChannel channel(tamper, transcript_);
    AttemptOutcome outcome = Attempt(channel, setup_.password, setup_.biometric);
    return Finish(outcome, channel.honest_sends());
  }

  // An attacker holding the card reads its memory and tries to log in with a
  // guessed password and their own biometric.
  ScenarioRun PlayStolenCard() {
    transcript_.Record(Actor::kAdversary, EventKind::kAdversaryAction,
                       Ops::CardFields(card_), "read-card-memory");
    if constexpr (Ops::kScheme == Scheme::kImproved) {
      Digest extracted = improved::StolenCardExtract(card_);
      Digest truth = harness_hasher_({setup_.id, setup_.secrets.master_key});
      result_.extraction_matches = extracted == truth;
      transcript_.Record(Actor::kHarness, EventKind::kVerify,
                         {{"e_i^r_i", extracted.hex()}},
                         extracted == truth ? "extraction-identity-holds"
                                            : "extraction-identity-broken");
    }
    AdversarialChannel channel(adversary::Passive{}, transcript_);
    AttemptOutcome outcome =
        Attempt(channel, setup_.wrong_password, setup_.attacker_biometric);
    return Finish(outcome, channel.honest_sends());
  }

  // Two honest logins, then the adversary replays the second login message.
  ScenarioRun PlayDoubleLogin() {
    AdversarialChannel channel(adversary::Passive{}, transcript_);
    AttemptOutcome first = Attempt(channel, setup_.password, setup_.biometric);
    RecordReplayEntry();
    std::size_t second_index = channel.honest_sends();
    AttemptOutcome second = Attempt(channel, setup_.password, setup_.biometric);
    RecordReplayEntry();
    if (!first.verdict.accepted()) return Finish(first, channel.honest_sends());
    if (!second.verdict.accepted()) {
      return Finish(second, channel.honest_sends());
    }
    channel.ReplayCaptured(second_index, Actor::kServer);
    AttemptOutcome replayed = Deliver(channel, nullptr);
    return Finish(replayed, channel.honest_sends());
  }

  void RecordReplayEntry() {
    FieldMap fields;
    if (auto m7 = server_.replay_db.Lookup(setup_.id)) {
      fields.emplace("M_7", m7->hex());
    }
    transcript_.Record(Actor::kServer, EventKind::kVerify, std::move(fields),
                       "replay-db-entry");
  }

  // A well-formed message of the scheme, used only for its field layout.
  WireMessage SampleMessage(MessageKind kind) const {
    const std::size_t size = client_hasher_.digest_size();
    Digest zero = Digest::Zero(size);
    if (kind == MessageKind::kLogin) {
      typename Ops::LoginMessage m;
      m.id = setup_.id;
      if constexpr (Ops::kScheme == Scheme::kImproved) {
        m.m2 = m.m3 = m.m4 = m.m5 = zero;
      } else {
        m.m2 = m.m4 = m.m5 = zero;
      }
      return m;
    }
    typename Ops::AuthResponse r;
    if constexpr (Ops::kScheme == Scheme::kImproved) {
      r.m10 = r.m11 = r.m12 = zero;
    } else {
      r.m10 = r.m11 = zero;
    }
    return r;
  }

  Setup setup_;
  Hasher rc_hasher_;
  Hasher client_hasher_;
  Hasher server_hasher_;
  Hasher harness_hasher_;
  ServerState server_;
  Card card_;
  Transcript transcript_;
  ScenarioResult result_;
  std::vector<Verdict> last_extras_;
};

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  for (const auto& e : kSchemes) {
    if (e.scheme == scheme) return e.name;
  }
  return "unknown";
}

std::optional<Scheme> ParseScheme(std::string_view name) {
  for (const auto& e : kSchemes) {
    if (e.name == name) return e.scheme;
  }
  return std::nullopt;
}

std::string_view ScenarioName(ScenarioId scenario) {
  for (const auto& e : kScenarioNames) {
    if (e.id == scenario) return e.name;
  }
  return "unknown";
}

std::optional<ScenarioId> ParseScenario(std::string_view name) {
  for (const auto& e : kScenarioNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

ScenarioId ScenarioFromName(std::string_view name) {
  auto id = ParseScenario(name);
  if (!id) throw UnknownScenarioError("unknown scenario '" + std::string(name) + "'");
  return *id;
}

std::string Verdict::ToString() const {
  if (accepted()) return "accept";
  return RejectLabel(*reject);
}

std::string_view Verdict::Class() const {
  if (accepted()) return "accept";
  return RejectSideName(SideOf(*reject));
}

ScenarioRun RunScenario(Scheme scheme, ScenarioId scenario, std::uint64_t seed,
                        HashConfig hash) {
  if (scheme == Scheme::kBaseline) {
    return Runner<BaselineOps>(scenario, seed, hash).Play(scenario);
  }
  return Runner<ImprovedOps>(scenario, seed, hash).Play(scenario);
}

ScenarioRun RunLoginUnderPolicy(Scheme scheme, std::uint64_t seed,
                                const AdversaryPolicy& policy,
                                HashConfig hash) {
  if (scheme == Scheme::kBaseline) {
    return Runner<BaselineOps>(ScenarioId::kHonest, seed, hash)
        .PlayUnderPolicy(policy);
  }
  return Runner<ImprovedOps>(ScenarioId::kHonest, seed, hash)
      .PlayUnderPolicy(policy);
}

Expectation ExpectedOutcome(Scheme scheme, ScenarioId scenario) {
  const bool improved = scheme == Scheme::kImproved;
  switch (scenario) {
    case ScenarioId::kHonest:
      return {true, std::nullopt, "mutual authentication with equal keys"};
    case ScenarioId::kHashCount:
      return {true, std::nullopt, "honest run with instrumented hash counts"};
    case ScenarioId::kWrongPassword:
      if (improved) {
        return {false, RejectReason::kWrongPassword,
                "card rejects the password locally; nothing is sent"};
      }
      return {false, RejectReason::kAuthM5,
              "login sent anyway; server rejects at the M_5 check"};
    case ScenarioId::kWrongPasswordChange:
      if (improved) {
        return {true, std::nullopt,
                "change rejected; unchanged password still logs in"};
      }
      return {false, RejectReason::kAuthM5,
              "card corrupted; later logins rejected by the server"};
    case ScenarioId::kCorrectPasswordChange:
      return {true, std::nullopt, "login with the new password succeeds"};
    case ScenarioId::kReplay:
      return {false, RejectReason::kReplay,
              "verbatim resend rejected as a replay"};
    case ScenarioId::kTamper:
      return {false, std::nullopt, "single-bit tamper rejected"};
    case ScenarioId::kStolenCard:
      return {false, RejectReason::kBiometricMismatch,
              "card holder without the biometric is refused"};
    case ScenarioId::kDoubleLogin:
      return {false, RejectReason::kReplay,
              "two fresh logins accepted; replay of the second rejected"};
  }
  throw UnknownScenarioError("unhandled scenario");
}

bool MatchesExpectation(const Expectation& expected, const Verdict& verdict) {
  if (expected.accept) return verdict.accepted();
  if (verdict.accepted()) return false;
  return !expected.reason || *expected.reason == *verdict.reject;
}

}  // namespace smartauth
