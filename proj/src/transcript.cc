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

#include "smartauth/transcript.h"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace smartauth {

std::string_view ActorName(Actor actor) {
  switch (actor) {
    case Actor::kRegistrationCenter:
      return "registration-center";
    case Actor::kClient:
      return "client";
    case Actor::kServer:
      return "server";
    case Actor::kAdversary:
      return "adversary";
    case Actor::kHarness:
      return "harness";
  }
  return "unknown";
}

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kSend:
      return "send";
    case EventKind::kReceive:
      return "receive";
    case EventKind::kVerify:
      return "verify";
    case EventKind::kReject:
      return "reject";
    case EventKind::kAccept:
      return "accept";
    case EventKind::kAdversaryAction:
      return "adversary-action";
    case EventKind::kKeyDerived:
      return "key-derived";
  }
  return "unknown";
}

void Transcript::Record(Actor actor, EventKind kind, FieldMap fields,
                        std::string verdict) {
  events_.push_back(TranscriptEvent{events_.size() + 1, actor, kind,
                                    std::move(fields), std::move(verdict)});
}

std::string FormatStructuredLine(const TranscriptEvent& event) {
  std::string line = "step=" + std::to_string(event.step);
  line += " actor=";
  line += ActorName(event.actor);
  line += " kind=";
  line += EventKindName(event.kind);
  line += " fields=";
  bool first = true;
  for (const auto& [name, hex] : event.fields) {
    if (!first) line += ',';
    first = false;
    line += name;
    line += '=';
    line += hex;
  }
  line += " verdict=";
  line += event.verdict;
  return line;
}

std::string Transcript::ToStructuredLines() const {
  std::string out;
  for (const auto& event : events_) {
    out += FormatStructuredLine(event);
    out += '\n';
  }
  return out;
}

std::string Transcript::ToText() const {
  std::string out;
  for (const auto& event : events_) {
    char head[96];
    std::snprintf(head, sizeof(head), "[%3zu] %-19s %-16s ", event.step,
                  std::string(ActorName(event.actor)).c_str(),
                  std::string(EventKindName(event.kind)).c_str());
    out += head;
    out += event.verdict;
    out += '\n';
    std::size_t width = 0;
    for (const auto& [name, hex] : event.fields) {
      width = std::max(width, name.size());
    }
    for (const auto& [name, hex] : event.fields) {
      out += "        ";
      out += name;
      out.append(width - name.size(), ' ');
      out += " = ";
      out += hex;
      out += '\n';
    }
  }
  return out;
}

}  // namespace smartauth
