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

#include "smartauth/hash.h"

#include <openssl/sha.h>

#include <array>
#include <limits>

namespace smartauth {

Bytes EncodeConcat(std::span<const ByteView> parts) {
  if (parts.empty()) {
    throw EncodingError("encode_concat requires at least one part");
  }
  std::size_t total = 0;
  for (ByteView part : parts) {
    if (part.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw EncodingError("part of " + std::to_string(part.size()) +
                          " bytes exceeds the 32-bit length prefix");
    }
    total += 4 + part.size();
  }
  Bytes out;
  out.reserve(total);
  for (ByteView part : parts) {
    auto len = static_cast<std::uint32_t>(part.size());
    out.push_back(static_cast<std::uint8_t>(len >> 24));
    out.push_back(static_cast<std::uint8_t>(len >> 16));
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Bytes EncodeConcat(std::initializer_list<ByteView> parts) {
  return EncodeConcat(std::span<const ByteView>(parts.begin(), parts.size()));
}

std::string_view HashAlgorithmName(HashAlgorithm algorithm) {
  switch (algorithm) {
    case HashAlgorithm::kSha256:
      return "standard";
    case HashAlgorithm::kToy8:
      return "toy-8";
    case HashAlgorithm::kToy16:
      return "toy-16";
  }
  return "unknown";
}

std::optional<HashAlgorithm> ParseHashAlgorithm(std::string_view name) {
  if (name == "standard" || name == "sha256") return HashAlgorithm::kSha256;
  if (name == "toy-8") return HashAlgorithm::kToy8;
  if (name == "toy-16") return HashAlgorithm::kToy16;
  return std::nullopt;
}

std::size_t HashConfig::digest_size() const {
  switch (algorithm) {
    case HashAlgorithm::kSha256:
      return SHA256_DIGEST_LENGTH;
    case HashAlgorithm::kToy8:
      return 1;
    case HashAlgorithm::kToy16:
      return 2;
  }
  return SHA256_DIGEST_LENGTH;
}

Hasher::Hasher(HashConfig config) : config_(config) {}

Digest Hasher::Compute(ByteView encoded) const {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> full{};
  SHA256(encoded.data(), encoded.size(), full.data());
  return Digest(Bytes(full.begin(), full.begin() + config_.digest_size()));
}

Digest Hasher::Hash(std::span<const ByteView> parts) {
  Bytes encoded = EncodeConcat(parts);
  if (config_.counter_enabled) ++counter_.count;
  return Compute(encoded);
}

Digest Hasher::operator()(std::initializer_list<ByteView> parts) {
  return Hash(std::span<const ByteView>(parts.begin(), parts.size()));
}

Digest Hasher::HashBiometric(ByteView sample) {
  ByteView parts[] = {sample};
  Bytes encoded = EncodeConcat(parts);
  if (config_.counter_enabled) ++counter_.biometric;
  return Compute(encoded);
}

}  // namespace smartauth
