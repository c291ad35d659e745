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

#ifndef SMARTAUTH_HASH_H_
#define SMARTAUTH_HASH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "smartauth/bytes.h"
#include "smartauth/digest.h"

namespace smartauth {

class EncodingError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Length-prefixed framing: for each part a 4-byte big-endian length, then the
// part itself. Injective over part lists. Throws EncodingError on an empty
// list or a part of 2^32 bytes or more.
Bytes EncodeConcat(std::span<const ByteView> parts);
Bytes EncodeConcat(std::initializer_list<ByteView> parts);

enum class HashAlgorithm {
  kSha256,  // default for every scenario run
  kToy8,    // SHA-256 truncated to 1 byte; exhaustive oracle tests only
  kToy16,   // SHA-256 truncated to 2 bytes
};

std::string_view HashAlgorithmName(HashAlgorithm algorithm);
std::optional<HashAlgorithm> ParseHashAlgorithm(std::string_view name);

struct HashConfig {
  HashAlgorithm algorithm = HashAlgorithm::kSha256;
  bool counter_enabled = true;

  std::size_t digest_size() const;
};

// Invocation counts since the last reset. Protocol hashes and the hashing of
// a fresh biometric sample are kept apart so that cost accounting can leave
// the biometric gate out.
struct HashCounter {
  std::uint64_t count = 0;
  std::uint64_t biometric = 0;
};

// The protocol hash h(.) bound to one actor. Each actor owns its Hasher so
// that invocation counts are attributed per side.
class Hasher {
 public:
  explicit Hasher(HashConfig config = {});

  const HashConfig& config() const { return config_; }
  std::size_t digest_size() const { return config_.digest_size(); }

  // h(EncodeConcat(parts)).
  Digest Hash(std::span<const ByteView> parts);
  Digest operator()(std::initializer_list<ByteView> parts);

  // h(sample) for the biometric gate; tallied under HashCounter::biometric.
  Digest HashBiometric(ByteView sample);

  const HashCounter& counter() const { return counter_; }
  void ResetCounter() { counter_ = {}; }

 private:
  Digest Compute(ByteView encoded) const;

  HashConfig config_;
  HashCounter counter_;
};

}  // namespace smartauth

#endif  // SMARTAUTH_HASH_H_
