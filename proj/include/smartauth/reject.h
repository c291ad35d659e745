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

#ifndef SMARTAUTH_REJECT_H_
#define SMARTAUTH_REJECT_H_

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>

namespace smartauth {

// Why a protocol step refused to continue. Each value names the check that
// fired so attack scenarios can assert on it.
enum class RejectReason {
  kMalformedId,       // ID format check (registration or server)
  kBiometricMismatch, // card-side biometric gate
  kWrongPassword,     // improved login: r'_i != r_i
  kWrongOldPassword,  // improved password change: r'_i != r_i
  kAuthM8,            // improved server: M_8 != M_3
  kAuthM5,            // server: M_5 != h(M_2 || M_8 || M_4)
  kReplay,            // server: M_7 equals the stored value
  kServerAuthM11,     // baseline client: M_11 mismatch
  kServerAuthM14,     // improved client: M_14 != M_11
  kServerAuthM12,     // improved client: M_12 mismatch
  kNoResponse,        // client never received a reply
};

// Which actor's check fired.
enum class RejectSide { kLocal, kServer, kClient };

std::string_view RejectReasonName(RejectReason reason);
std::optional<RejectReason> ParseRejectReason(std::string_view name);
RejectSide SideOf(RejectReason reason);
std::string_view RejectSideName(RejectSide side);

// Either a value or the reason a protocol step rejected.
template <typename T>
class Outcome {
 public:
  Outcome(T value) : state_(std::move(value)) {}       // NOLINT
  Outcome(RejectReason reason) : state_(reason) {}     // NOLINT

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  RejectReason reason() const {
    if (ok()) throw std::logic_error("Outcome holds a value, not a rejection");
    return std::get<RejectReason>(state_);
  }

  const T& value() const& { return Checked(); }
  T& value() & { return Checked(); }
  T&& value() && { return std::move(Checked()); }
  const T& operator*() const& { return Checked(); }
  T& operator*() & { return Checked(); }
  const T* operator->() const { return &Checked(); }
  T* operator->() { return &Checked(); }

 private:
  T& Checked() {
    if (!ok()) throw std::logic_error("Outcome holds a rejection");
    return std::get<T>(state_);
  }
  const T& Checked() const {
    if (!ok()) throw std::logic_error("Outcome holds a rejection");
    return std::get<T>(state_);
  }

  std::variant<T, RejectReason> state_;
};

}  // namespace smartauth

#endif  // SMARTAUTH_REJECT_H_
