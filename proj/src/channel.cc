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

#include "smartauth/channel.h"

#include <stdexcept>
#include <utility>

namespace smartauth {
namespace {

// Mutable views over the fields of a wire message.
using FieldRef = std::variant<Bytes*, Digest*>;
using FieldRefs = std::vector<std::pair<std::string, FieldRef>>;

FieldRefs Fields(baseline::LoginMessage& m) {
  return {{"ID_i", &m.id}, {"M_2", &m.m2}, {"M_4", &m.m4}, {"M_5", &m.m5}};
}
FieldRefs Fields(baseline::AuthResponse& m) {
  return {{"M_10", &m.m10}, {"M_11", &m.m11}};
}
FieldRefs Fields(improved::LoginMessage& m) {
  return {{"ID_i", &m.id},
          {"M_2", &m.m2},
          {"M_3", &m.m3},
          {"M_4", &m.m4},
          {"M_5", &m.m5}};
}
FieldRefs Fields(improved::AuthResponse& m) {
  return {{"M_10", &m.m10}, {"M_11", &m.m11}, {"M_12", &m.m12}};
}

FieldRefs FieldsOf(WireMessage& message) {
  return std::visit([](auto& m) { return Fields(m); }, message);
}

std::string FieldHex(const FieldRef& ref) {
  if (const auto* bytes = std::get_if<Bytes*>(&ref)) return ToHex(**bytes);
  return std::get<Digest*>(ref)->hex();
}

std::size_t FieldSize(const FieldRef& ref) {
  if (const auto* bytes = std::get_if<Bytes*>(&ref)) return (*bytes)->size();
  return std::get<Digest*>(ref)->size();
}

FieldRef Find(FieldRefs& refs, std::string_view field) {
  for (auto& [name, ref] : refs) {
    if (name == field) return ref;
  }
  throw std::out_of_range("message has no field '" + std::string(field) + "'");
}

std::string_view ProtocolName(const WireMessage& message) {
  return message.index() < 2 ? "baseline" : "improved";
}

}  // namespace

std::string_view MessageKindName(MessageKind kind) {
  return kind == MessageKind::kLogin ? "login" : "response";
}

MessageKind KindOf(const WireMessage& message) {
  return message.index() % 2 == 0 ? MessageKind::kLogin
                                  : MessageKind::kResponse;
}

std::vector<std::string> FieldNames(const WireMessage& message) {
  WireMessage copy = message;
  std::vector<std::string> names;
  for (auto& [name, ref] : FieldsOf(copy)) names.push_back(name);
  return names;
}

FieldMap FieldsHex(const WireMessage& message) {
  WireMessage copy = message;
  FieldMap out;
  for (auto& [name, ref] : FieldsOf(copy)) out.emplace(name, FieldHex(ref));
  return out;
}

std::size_t FieldBits(const WireMessage& message, std::string_view field) {
  WireMessage copy = message;
  FieldRefs refs = FieldsOf(copy);
  return FieldSize(Find(refs, field)) * 8;
}

void FlipFieldBit(WireMessage& message, std::string_view field,
                  std::size_t bit) {
  FieldRefs refs = FieldsOf(message);
  FieldRef ref = Find(refs, field);
  if (bit >= FieldSize(ref) * 8) {
    throw std::out_of_range("bit index beyond field width");
  }
  if (auto* bytes = std::get_if<Bytes*>(&ref)) {
    (**bytes)[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
  } else {
    std::get<Digest*>(ref)->FlipBit(bit);
  }
}

std::string DescribePolicy(const AdversaryPolicy& policy) {
  struct Describer {
    std::string operator()(const adversary::Passive&) const {
      return "passive";
    }
    std::string operator()(const adversary::Replay& p) const {
      return "replay(" + std::string(MessageKindName(p.target)) + "," +
             std::to_string(p.copies) + ")";
    }
    std::string operator()(const adversary::Tamper& p) const {
      return "tamper(" + std::string(MessageKindName(p.target)) + "." +
             p.field + ",bit=" + std::to_string(p.bit) + ")";
    }
    std::string operator()(const adversary::Drop& p) const {
      return "drop(" + std::string(MessageKindName(p.target)) + ")";
    }
    std::string operator()(const adversary::Inject& p) const {
      return "inject(" + std::string(ProtocolName(p.message)) + "." +
             std::string(MessageKindName(KindOf(p.message))) + ")";
    }
  };
  return std::visit(Describer{}, policy);
}

AdversarialChannel::AdversarialChannel(AdversaryPolicy policy,
                                       Transcript& transcript)
    : policy_(std::move(policy)), transcript_(transcript) {}

bool AdversarialChannel::Fires(MessageKind kind, MessageKind target) {
  if (fired_ || kind != target) return false;
  fired_ = true;
  return true;
}

void AdversarialChannel::LogAction(std::string action, FieldMap fields) {
  transcript_.Record(Actor::kAdversary, EventKind::kAdversaryAction,
                     std::move(fields), action);
  action_log_.push_back(std::move(action));
}

void AdversarialChannel::Send(Actor from, Actor to, WireMessage message) {
  transcript_.Record(from, EventKind::kSend, FieldsHex(message));
  captured_.push_back(message);
  auto& queue = inbox_[to];
  const MessageKind kind = KindOf(message);

  if (const auto* replay = std::get_if<adversary::Replay>(&policy_)) {
    queue.push_back(message);
    if (Fires(kind, replay->target)) {
      for (int i = 0; i < replay->copies; ++i) {
        LogAction("replay", FieldsHex(message));
        queue.push_back(message);
      }
    }
    return;
  }
  if (const auto* tamper = std::get_if<adversary::Tamper>(&policy_)) {
    if (Fires(kind, tamper->target)) {
      FlipFieldBit(message, tamper->field, tamper->bit);
      LogAction("tamper:" + tamper->field + ":bit=" +
                    std::to_string(tamper->bit),
                FieldsHex(message));
    }
    queue.push_back(std::move(message));
    return;
  }
  if (const auto* drop = std::get_if<adversary::Drop>(&policy_)) {
    if (Fires(kind, drop->target)) {
      LogAction("drop:" + std::string(MessageKindName(kind)));
      return;
    }
    queue.push_back(std::move(message));
    return;
  }
  if (const auto* inject = std::get_if<adversary::Inject>(&policy_)) {
    if (Fires(kind, KindOf(inject->message))) {
      LogAction("inject", FieldsHex(inject->message));
      queue.push_back(inject->message);
    }
    queue.push_back(std::move(message));
    return;
  }
  queue.push_back(std::move(message));
}

std::optional<WireMessage> AdversarialChannel::Receive(Actor to) {
  auto it = inbox_.find(to);
  if (it == inbox_.end() || it->second.empty()) return std::nullopt;
  WireMessage message = std::move(it->second.front());
  it->second.pop_front();
  transcript_.Record(to, EventKind::kReceive, FieldsHex(message));
  return message;
}

bool AdversarialChannel::HasPending(Actor to) const {
  auto it = inbox_.find(to);
  return it != inbox_.end() && !it->second.empty();
}

void AdversarialChannel::ReplayCaptured(std::size_t index, Actor to) {
  if (index >= captured_.size()) {
    throw std::out_of_range("no captured message at index " +
                            std::to_string(index));
  }
  LogAction("replay-captured:" + std::to_string(index),
            FieldsHex(captured_[index]));
  inbox_[to].push_back(captured_[index]);
}

void AdversarialChannel::Inject(Actor to, WireMessage message) {
  LogAction("inject", FieldsHex(message));
  inbox_[to].push_back(std::move(message));
}

}  // namespace smartauth
