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

#ifndef SMARTAUTH_DIGEST_H_
#define SMARTAUTH_DIGEST_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "smartauth/bytes.h"

namespace smartauth {

// Raised when two digests of different widths are combined.
class DigestArithmeticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A fixed-width hash output. Every masked value, nonce and session key in
// both schemes is a Digest of the configured hash width.
class Digest {
 public:
  Digest() = default;
  explicit Digest(Bytes bytes);

  static Digest Zero(std::size_t size);
  // Throws std::invalid_argument on malformed hex.
  static Digest FromHex(std::string_view hex);

  std::size_t size() const { return bytes_.size(); }
  bool empty() const { return bytes_.empty(); }
  const Bytes& bytes() const { return bytes_; }
  ByteView view() const { return bytes_; }
  operator ByteView() const { return bytes_; }  // NOLINT
  std::string hex() const { return ToHex(bytes_); }

  // Flips bit `index` counted from the most significant bit of byte 0.
  void FlipBit(std::size_t index);

  friend bool operator==(const Digest&, const Digest&) = default;
  friend auto operator<=>(const Digest&, const Digest&) = default;

 private:
  Bytes bytes_;
};

// Bytewise XOR; throws DigestArithmeticError on width mismatch.
Digest Xor(const Digest& a, const Digest& b);
inline Digest operator^(const Digest& a, const Digest& b) { return Xor(a, b); }

struct SessionKey {
  Digest value;
  friend bool operator==(const SessionKey&, const SessionKey&) = default;
};

}  // namespace smartauth

#endif  // SMARTAUTH_DIGEST_H_
