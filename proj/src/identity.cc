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

#include "smartauth/identity.h"

namespace smartauth {

bool IsWellFormedId(ByteView id) {
  if (id.empty() || id.size() > kMaxIdentityLength) return false;
  for (std::uint8_t c : id) {
    // 0x21..0x7e: printable, excludes space and control characters.
    if (c < 0x21 || c > 0x7e) return false;
  }
  return true;
}

bool IsAcceptablePassword(ByteView password) {
  return !password.empty() && password.size() <= kMaxPasswordLength;
}

}  // namespace smartauth
