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

#include "smartauth/reject.h"

#include <array>

namespace smartauth {
namespace {

struct ReasonEntry {
  RejectReason reason;
  std::string_view name;
  RejectSide side;
};

constexpr std::array<ReasonEntry, 11> kReasons = {{
    {RejectReason::kMalformedId, "format", RejectSide::kServer},
    {RejectReason::kBiometricMismatch, "biometric", RejectSide::kLocal},
    {RejectReason::kWrongPassword, "wrong-password", RejectSide::kLocal},
    {RejectReason::kWrongOldPassword, "wrong-old-password", RejectSide::kLocal},
    {RejectReason::kAuthM8, "auth-M8", RejectSide::kServer},
    {RejectReason::kAuthM5, "auth-M5", RejectSide::kServer},
    {RejectReason::kReplay, "replay", RejectSide::kServer},
    {RejectReason::kServerAuthM11, "server-auth-M11", RejectSide::kClient},
    {RejectReason::kServerAuthM14, "server-auth-M14", RejectSide::kClient},
    {RejectReason::kServerAuthM12, "server-auth-M12", RejectSide::kClient},
    {RejectReason::kNoResponse, "no-response", RejectSide::kClient},
}};

const ReasonEntry& Lookup(RejectReason reason) {
  for (const auto& entry : kReasons) {
    if (entry.reason == reason) return entry;
  }
  throw std::logic_error("unknown RejectReason");
}

}  // namespace

std::string_view RejectReasonName(RejectReason reason) {
  return Lookup(reason).name;
}

std::optional<RejectReason> ParseRejectReason(std::string_view name) {
  for (const auto& entry : kReasons) {
    if (entry.name == name) return entry.reason;
  }
  return std::nullopt;
}

RejectSide SideOf(RejectReason reason) { return Lookup(reason).side; }

std::string_view RejectSideName(RejectSide side) {
  switch (side) {
    case RejectSide::kLocal:
      return "local-reject";
    case RejectSide::kServer:
      return "server-reject";
    case RejectSide::kClient:
      return "client-reject";
  }
  return "unknown";
}

}  // namespace smartauth
