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

#ifndef SMARTAUTH_TRANSCRIPT_H_
#define SMARTAUTH_TRANSCRIPT_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace smartauth {

enum class Actor { kRegistrationCenter, kClient, kServer, kAdversary, kHarness };

enum class EventKind {
  kSend,
  kReceive,
  kVerify,
  kReject,
  kAccept,
  kAdversaryAction,
  kKeyDerived,
};

std::string_view ActorName(Actor actor);
std::string_view EventKindName(EventKind kind);

// Field name -> lowercase hex. std::map keeps the names sorted.
using FieldMap = std::map<std::string, std::string>;

struct TranscriptEvent {
  std::size_t step = 0;
  Actor actor = Actor::kHarness;
  EventKind kind = EventKind::kVerify;
  FieldMap fields;
  std::string verdict;

  friend bool operator==(const TranscriptEvent&,
                         const TranscriptEvent&) = default;
};

// Ordered record of one scenario run. Steps are numbered from 1.
class Transcript {
 public:
  void Record(Actor actor, EventKind kind, FieldMap fields = {},
              std::string verdict = "-");

  const std::vector<TranscriptEvent>& events() const { return events_; }
  bool empty() const { return events_.empty(); }

  // One record per line:
  //   step=<n> actor=<a> kind=<k> fields=<name=hex,...> verdict=<v>
  std::string ToStructuredLines() const;
  std::string ToText() const;

 private:
  std::vector<TranscriptEvent> events_;
};

std::string FormatStructuredLine(const TranscriptEvent& event);

}  // namespace smartauth

#endif  // SMARTAUTH_TRANSCRIPT_H_
