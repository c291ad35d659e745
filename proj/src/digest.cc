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

#include "smartauth/digest.h"

#include <utility>

namespace smartauth {

Digest::Digest(Bytes bytes) : bytes_(std::move(bytes)) {}

Digest Digest::Zero(std::size_t size) { return Digest(Bytes(size, 0)); }

Digest Digest::FromHex(std::string_view hex) {
  return Digest(smartauth::FromHex(hex));
}

void Digest::FlipBit(std::size_t index) {
  if (index >= bytes_.size() * 8) {
    throw std::out_of_range("bit index beyond digest width");
  }
  bytes_[index / 8] ^= static_cast<std::uint8_t>(0x80u >> (index % 8));
}

Digest Xor(const Digest& a, const Digest& b) {
  if (a.size() != b.size()) {
    throw DigestArithmeticError("xor of digests with different widths: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  Bytes out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.bytes()[i] ^ b.bytes()[i];
  }
  return Digest(std::move(out));
}

}  // namespace smartauth
