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

#ifndef SMARTAUTH_CHANNEL_H_
#define SMARTAUTH_CHANNEL_H_

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smartauth/baseline.h"
#include "smartauth/improved.h"
#include "smartauth/transcript.h"

namespace smartauth {

enum class MessageKind { kLogin, kResponse };

std::string_view MessageKindName(MessageKind kind);

using WireMessage =
    std::variant<baseline::LoginMessage, baseline::AuthResponse,
                 improved::LoginMessage, improved::AuthResponse>;

MessageKind KindOf(const WireMessage& message);

// Field names in wire order, e.g. {"ID_i", "M_2", "M_4", "M_5"}.
std::vector<std::string> FieldNames(const WireMessage& message);
FieldMap FieldsHex(const WireMessage& message);
// Width in bits of the named field; throws std::out_of_range if absent.
std::size_t FieldBits(const WireMessage& message, std::string_view field);
void FlipFieldBit(WireMessage& message, std::string_view field,
                  std::size_t bit);

namespace adversary {

struct Passive {};

// Delivers the first message of `target` followed by `copies` verbatim copies.
struct Replay {
  MessageKind target = MessageKind::kLogin;
  int copies = 1;
};

// Flips one bit of one field in the first message of `target`.
struct Tamper {
  MessageKind target = MessageKind::kLogin;
  std::string field;
  std::size_t bit = 0;
};

// Swallows the first message of `target`.
struct Drop {
  MessageKind target = MessageKind::kLogin;
};

// Delivers `message` ahead of the first honest message of the same kind.
struct Inject {
  WireMessage message;
};

}  // namespace adversary

using AdversaryPolicy =
    std::variant<adversary::Passive, adversary::Replay, adversary::Tamper,
                 adversary::Drop, adversary::Inject>;

std::string DescribePolicy(const AdversaryPolicy& policy);

// In-memory network between client and server with a scripted attacker in
// the middle. Each policy fires at most once. Every honest send, delivery and
// adversary action is written to the transcript.
class AdversarialChannel {
 public:
  AdversarialChannel(AdversaryPolicy policy, Transcript& transcript);

  void Send(Actor from, Actor to, WireMessage message);
  std::optional<WireMessage> Receive(Actor to);
  bool HasPending(Actor to) const;

  // Adversary re-delivers the `index`-th honest message verbatim.
  void ReplayCaptured(std::size_t index, Actor to);
  // Adversary delivers an arbitrary message.
  void Inject(Actor to, WireMessage message);

  std::size_t honest_sends() const { return captured_.size(); }
  const std::vector<WireMessage>& captured() const { return captured_; }
  const std::vector<std::string>& action_log() const { return action_log_; }

 private:
  void LogAction(std::string action, FieldMap fields = {});
  bool Fires(MessageKind kind, MessageKind target);

  AdversaryPolicy policy_;
  bool fired_ = false;
  Transcript& transcript_;
  std::map<Actor, std::deque<WireMessage>> inbox_;
  std::vector<WireMessage> captured_;
  std::vector<std::string> action_log_;
};

}  // namespace smartauth

#endif  // SMARTAUTH_CHANNEL_H_
