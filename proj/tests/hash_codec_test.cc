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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "oracle.h"
#include "smartauth/bytes.h"
#include "smartauth/digest.h"
#include "smartauth/hash.h"
#include "smartauth/rng.h"

namespace smartauth {
namespace {

using PartList = std::vector<Bytes>;

Bytes Encode(const PartList& parts) {
  std::vector<ByteView> views(parts.begin(), parts.end());
  return EncodeConcat(views);
}

TEST(EncodeConcatTest, SingleByteFraming) {
  EXPECT_EQ(EncodeConcat({ToBytes("A")}),
            (Bytes{0x00, 0x00, 0x00, 0x01, 0x41}));
}

TEST(EncodeConcatTest, SplitPointMatters) {
  EXPECT_NE(EncodeConcat({ToBytes("A"), ToBytes("B")}),
            EncodeConcat({ToBytes("AB")}));
}

TEST(EncodeConcatTest, EmptyPartIsFramed) {
  EXPECT_EQ(EncodeConcat({Bytes{}}), (Bytes{0, 0, 0, 0}));
}

TEST(EncodeConcatTest, EmptyListIsAnError) {
  EXPECT_THROW(EncodeConcat(std::span<const ByteView>{}), EncodingError);
}

TEST(EncodeConcatTest, OversizedPartIsAnError) {
  // Length is validated before any byte is read.
  static const std::uint8_t kByte = 0;
  ByteView huge(&kByte, std::size_t{1} << 32);
  EXPECT_THROW(EncodeConcat({huge}), EncodingError);
}

// Brute-force pairwise comparison over 1000 random (x, y) pairs: equal
// encodings must come from equal pairs.
TEST(EncodeConcatTest, InjectiveOverRandomPairs) {
  Rng rng(1234);
  std::map<Bytes, std::pair<Bytes, Bytes>> seen;
  for (int i = 0; i < 1000; ++i) {
    Bytes x = rng.NextBytes(rng.Uniform(6));
    Bytes y = rng.NextBytes(rng.Uniform(6));
    Bytes enc = Encode({x, y});
    auto [it, inserted] = seen.emplace(enc, std::make_pair(x, y));
    if (!inserted) {
      EXPECT_EQ(it->second, std::make_pair(x, y));
    }
  }
}

TEST(EncodeConcatTest, InjectiveOverRandomPartLists) {
  Rng rng(99);
  std::map<Bytes, PartList> seen;
  for (int i = 0; i < 5000; ++i) {
    PartList parts(1 + rng.Uniform(4));
    for (auto& p : parts) p = rng.NextBytes(rng.Uniform(9));
    Bytes enc = Encode(parts);
    auto [it, inserted] = seen.emplace(enc, parts);
    if (!inserted) {
      EXPECT_EQ(it->second, parts);
    }
  }
}

TEST(HashTest, MatchesFrozenSha256Vector) {
  // SHA-256 of 00000003 616263, computed with Python's hashlib.
  Hasher h;
  EXPECT_EQ(h({ToBytes("abc")}).hex(),
            "d04b72a650ce0f8ce4963330a53ee2832733d2baeffff3c1d8e256cca096d120");
  EXPECT_EQ(h({ToBytes("A"), ToBytes("B")}).hex(),
            "23f6b52cb866d1930eeba5f1de75c4feccdba6d9103c05b2054d85e37fb33225");
}

TEST(HashTest, Deterministic) {
  Hasher h;
  Bytes x = ToBytes("same input");
  EXPECT_EQ(h({x}), h({x}));
  EXPECT_EQ(h({x}).size(), 32u);
}

TEST(HashTest, Toy8ExhaustiveSingleBytes) {
  Hasher h(HashConfig{HashAlgorithm::kToy8});
  std::set<Digest> outputs;
  for (int v = 0; v < 256; ++v) {
    Bytes x{static_cast<std::uint8_t>(v)};
    Digest d = h({x});
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.bytes(), oracle::H({x}, 1));
    outputs.insert(d);
  }
  EXPECT_LE(outputs.size(), 256u);
  EXPECT_GT(outputs.size(), 1u);
}

TEST(HashTest, Toy16Width) {
  Hasher h(HashConfig{HashAlgorithm::kToy16});
  EXPECT_EQ(h({ToBytes("x")}).size(), 2u);
  EXPECT_EQ(h.digest_size(), 2u);
}

TEST(HashTest, CounterCountsEachCall) {
  Hasher h;
  for (int n = 1; n <= 25; ++n) {
    h({ToBytes("p"), ToBytes(std::to_string(n))});
    EXPECT_EQ(h.counter().count, static_cast<std::uint64_t>(n));
  }
  h.HashBiometric(ToBytes("sample"));
  EXPECT_EQ(h.counter().count, 25u);
  EXPECT_EQ(h.counter().biometric, 1u);
  h.ResetCounter();
  EXPECT_EQ(h.counter().count, 0u);
  EXPECT_EQ(h.counter().biometric, 0u);
}

TEST(HashTest, CounterDisabled) {
  Hasher h(HashConfig{HashAlgorithm::kSha256, false});
  h({ToBytes("a")});
  EXPECT_EQ(h.counter().count, 0u);
}

TEST(HashTest, BiometricHashEqualsSinglePartHash) {
  Hasher h;
  Bytes b = ToBytes("fingerprint");
  EXPECT_EQ(h.HashBiometric(b), h({b}));
}

TEST(HashAlgorithmTest, NamesRoundTrip) {
  for (auto a : {HashAlgorithm::kSha256, HashAlgorithm::kToy8,
                 HashAlgorithm::kToy16}) {
    EXPECT_EQ(ParseHashAlgorithm(HashAlgorithmName(a)), a);
  }
  EXPECT_FALSE(ParseHashAlgorithm("md5").has_value());
}

TEST(XorTest, SelfInverseIdentityAndInvolution) {
  Rng rng(7);
  Digest a = rng.NextDigest(32);
  Digest b = rng.NextDigest(32);
  EXPECT_EQ(a ^ a, Digest::Zero(32));
  EXPECT_EQ((a ^ b) ^ b, a);
  EXPECT_EQ(a ^ Digest::Zero(32), a);
}

TEST(XorTest, ExhaustiveLawsAtWidth8) {
  auto d = [](int v) { return Digest(Bytes{static_cast<std::uint8_t>(v)}); };
  for (int a = 0; a < 256; ++a) {
    EXPECT_EQ(d(a) ^ d(a), d(0));
    for (int b = 0; b < 256; ++b) {
      ASSERT_EQ(d(a) ^ d(b), d(b) ^ d(a));
      ASSERT_EQ((d(a) ^ d(b)).bytes()[0], static_cast<std::uint8_t>(a ^ b));
    }
  }
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; ++b) {
      Digest ab = d(a) ^ d(b);
      for (int c = 0; c < 256; ++c) {
        ASSERT_EQ(ab ^ d(c), d(a) ^ (d(b) ^ d(c)));
      }
    }
  }
}

TEST(XorTest, WidthMismatchIsAnError) {
  EXPECT_THROW(Digest::Zero(32) ^ Digest::Zero(16), DigestArithmeticError);
}

TEST(DigestTest, HexIsFixedWidthLowercase) {
  Digest d(Bytes{0x00, 0xab, 0x0f});
  EXPECT_EQ(d.hex(), "00ab0f");
  EXPECT_EQ(Digest::FromHex("00AB0f"), d);
  EXPECT_EQ(Digest::Zero(32).hex().size(), 64u);
}

TEST(DigestTest, MalformedHex) {
  EXPECT_THROW(Digest::FromHex("abc"), std::invalid_argument);
  EXPECT_THROW(Digest::FromHex("zz"), std::invalid_argument);
}

TEST(DigestTest, FlipBitCountsFromMostSignificant) {
  Digest d = Digest::Zero(2);
  d.FlipBit(0);
  d.FlipBit(15);
  EXPECT_EQ(d.hex(), "8001");
  EXPECT_THROW(d.FlipBit(16), std::out_of_range);
}

TEST(RngTest, SameSeedSameDraws) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(a.NextDigest(32), b.NextDigest(32));
  }
}

TEST(RngTest, ConsecutiveDrawsDiffer) {
  Rng rng(5);
  Digest prev = rng.NextDigest(32);
  for (int i = 0; i < 1000; ++i) {
    Digest next = rng.NextDigest(32);
    ASSERT_NE(prev, next);
    prev = next;
  }
}

TEST(RngTest, DrawLengthIsDigestWidth) {
  Rng rng(1);
  EXPECT_EQ(rng.NextDigest(HashConfig{}.digest_size()).size(), 32u);
  EXPECT_EQ(rng.NextDigest(HashConfig{HashAlgorithm::kToy8}.digest_size())
                .size(),
            1u);
}

TEST(RngTest, FrozenFirstWordOfMt19937_64) {
  // The standard pins the 10000th output of default-seeded mt19937_64.
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.NextU64();
  EXPECT_EQ(v, 9981545732273789042ull);
}

TEST(RngTest, UniformStaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.Uniform(7), 7u);
  EXPECT_THROW(rng.Uniform(0), std::invalid_argument);
}

TEST(BytesTest, HexRoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Bytes b = rng.NextBytes(rng.Uniform(40));
    EXPECT_EQ(FromHex(ToHex(b)), b);
  }
}

}  // namespace
}  // namespace smartauth
