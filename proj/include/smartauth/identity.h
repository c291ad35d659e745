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

#ifndef SMARTAUTH_IDENTITY_H_
#define SMARTAUTH_IDENTITY_H_

#include <cstddef>

#include "smartauth/bytes.h"

namespace smartauth {

inline constexpr std::size_t kMaxIdentityLength = 64;
inline constexpr std::size_t kMaxPasswordLength = 64;

// True iff `id` is 1-64 bytes of printable 7-bit ASCII with no whitespace.
bool IsWellFormedId(ByteView id);

// Passwords are arbitrary non-empty byte strings of at most 64 bytes.
bool IsAcceptablePassword(ByteView password);

}  // namespace smartauth

#endif  // SMARTAUTH_IDENTITY_H_
