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

#include "smartauth/improved.h"

#include <gtest/gtest.h>

#include "oracle.h"
#include "smartauth/actors.h"
#include "smartauth/baseline.h"

namespace smartauth::improved {
namespace {

using oracle::H;
using oracle::Raw;
using oracle::RawOf;
using oracle::X;

class ImprovedTest : public ::testing::Test {
 protected:
  ImprovedTest() : rng_(4096) {
    rc_.secrets = ServerSecrets::Generate(32, rng_);
    server_.secrets = rc_.secrets;
    server_.sid = ToBytes("server-01");
    card_ = Register(id_, pw_, bio_, rc_, hasher_, rng_).value();
  }

  Digest HIdXs() { return hasher_({id_, rc_.secrets.master_key}); }

  // Full honest exchange; returns the client key or the rejection.
  Outcome<SessionKey> Exchange(const Card& card, ByteView pw) {
    auto login = BeginLogin(card, bio_, pw, id_, hasher_, rng_);
    if (!login.ok()) return login.reason();
    auto accept = Authenticate(server_, login->message, hasher_, rng_);
    if (!accept.ok()) return accept.reason();
    ClientSession session = login->session;
    auto key =
        VerifyServer(session, card, accept->response, server_.sid, hasher_);
    if (key.ok()) EXPECT_EQ(*key, accept->session.key);
    return key;
  }

  Rng rng_;
  Hasher hasher_;
  RegistrationCenter rc_;
  ServerState server_;
  Bytes id_ = ToBytes("bob-7");
  Bytes pw_ = ToBytes("hunter2");
  Bytes bio_ = ToBytes("bob-iris-template");
  Card card_;
};

TEST_F(ImprovedTest, RegistrationStoresVerifier) {
  EXPECT_EQ(card_.e ^ card_.r, HIdXs());
  Raw rpw = H({card_.n, RawOf("hunter2")});
  EXPECT_EQ(card_.r.bytes(), H({rpw, H({RawOf("bob-iris-template")})}));
}

TEST_F(ImprovedTest, CardDiffersFromBaselineOnlyByVerifier) {
  Rng a(31), b(31);
  Card improved_card = Register(id_, pw_, bio_, rc_, hasher_, a).value();
  baseline::Card baseline_card =
      baseline::Register(id_, pw_, bio_, rc_, hasher_, b).value();
  EXPECT_EQ(improved_card.f, baseline_card.f);
  EXPECT_EQ(improved_card.e, baseline_card.e);
  EXPECT_EQ(improved_card.y, baseline_card.y);
  EXPECT_EQ(improved_card.n, baseline_card.n);
  EXPECT_EQ(StoredBytes(improved_card) - baseline::StoredBytes(baseline_card),
            improved_card.r.size());
}

TEST_F(ImprovedTest, WrongPasswordIsRejectedLocally) {
  auto login = BeginLogin(card_, bio_, ToBytes("hunter3"), id_, hasher_, rng_);
  ASSERT_FALSE(login.ok());
  EXPECT_EQ(login.reason(), RejectReason::kWrongPassword);
}

TEST_F(ImprovedTest, BiometricCheckedBeforePassword) {
  auto login =
      BeginLogin(card_, ToBytes("mallory"), ToBytes("x"), id_, hasher_, rng_);
  ASSERT_FALSE(login.ok());
  EXPECT_EQ(login.reason(), RejectReason::kBiometricMismatch);
}

TEST_F(ImprovedTest, LoginCarriesM3) {
  Digest r_c = rng_.NextDigest(32);
  auto login = BeginLogin(card_, bio_, pw_, id_, r_c, hasher_);
  ASSERT_TRUE(login.ok());
  EXPECT_EQ(login->message.m3, hasher_({card_.y, r_c}));
  EXPECT_EQ(login->message.m4 ^ login->message.m3, login->session.rpw);
}

TEST_F(ImprovedTest, HonestRunCancellationIdentities) {
  Digest r_c = rng_.NextDigest(32);
  Digest r_s = rng_.NextDigest(32);
  auto login = BeginLogin(card_, bio_, pw_, id_, r_c, hasher_);
  auto accept = Authenticate(server_, login->message, r_s, hasher_);
  ASSERT_TRUE(accept.ok());
  const ServerSession& s = accept->session;
  EXPECT_EQ(s.m7, r_c);
  EXPECT_EQ(s.m8, login->session.m3);
  EXPECT_EQ(s.m9, login->session.rpw);

  ClientSession session = login->session;
  auto key =
      VerifyServer(session, card_, accept->response, server_.sid, hasher_);
  ASSERT_TRUE(key.ok());
  EXPECT_EQ(*session.m13, r_s);
  EXPECT_EQ(*session.m14, accept->response.m11);
  EXPECT_EQ(*key, s.key);
  EXPECT_EQ(s.key.value, hasher_({s.m9, s.m8, r_s, server_.sid}));
}

TEST_F(ImprovedTest, ResponseMatchesRawEquations) {
  Digest r_c = rng_.NextDigest(32);
  Digest r_s = rng_.NextDigest(32);
  auto login = BeginLogin(card_, bio_, pw_, id_, r_c, hasher_);
  auto accept = Authenticate(server_, login->message, r_s, hasher_);
  ASSERT_TRUE(accept.ok());
  const Raw y = rc_.secrets.y.bytes();
  const Raw sid = server_.sid;
  Raw m6 = H({RawOf("bob-7"), rc_.secrets.master_key.bytes()});
  Raw m7 = X(login->message.m2.bytes(), m6);
  Raw m8 = H({y, m7});
  Raw m9 = X(login->message.m4.bytes(), m8);
  Raw m10 = X(X(H({m9, sid, y}), m8), r_s.bytes());
  Raw m11 = H({y, r_s.bytes()});
  Raw m12 = H({m6, m9, y, r_s.bytes()});
  EXPECT_EQ(accept->response.m10.bytes(), m10);
  EXPECT_EQ(accept->response.m11.bytes(), m11);
  EXPECT_EQ(accept->response.m12.bytes(), m12);
  EXPECT_EQ(accept->session.key.value.bytes(), H({m9, m8, r_s.bytes(), sid}));
}

TEST_F(ImprovedTest, RandomM3FailsM8Check) {
  for (int i = 0; i < 100; ++i) {
    auto login = BeginLogin(card_, bio_, pw_, id_, hasher_, rng_);
    LoginMessage forged = login->message;
    forged.m3 = rng_.NextDigest(32);
    auto accept = Authenticate(server_, forged, hasher_, rng_);
    ASSERT_FALSE(accept.ok());
    EXPECT_EQ(accept.reason(), RejectReason::kAuthM8);
  }
  EXPECT_EQ(server_.replay_db.size(), 0u);
}

TEST_F(ImprovedTest, M5CheckedAfterM8) {
  auto login = BeginLogin(card_, bio_, pw_, id_, hasher_, rng_);
  LoginMessage forged = login->message;
  forged.m5 = rng_.NextDigest(32);
  auto accept = Authenticate(server_, forged, hasher_, rng_);
  ASSERT_FALSE(accept.ok());
  EXPECT_EQ(accept.reason(), RejectReason::kAuthM5);
}

TEST_F(ImprovedTest, IdenticalResendIsReplay) {
  auto login = BeginLogin(card_, bio_, pw_, id_, hasher_, rng_);
  ASSERT_TRUE(Authenticate(server_, login->message, hasher_, rng_).ok());
  auto again = Authenticate(server_, login->message, hasher_, rng_);
  ASSERT_FALSE(again.ok());
  EXPECT_EQ(again.reason(), RejectReason::kReplay);
}

TEST_F(ImprovedTest, FlippedM12BitFailsSecondClientCheck) {
  for (int i = 0; i < 100; ++i) {
    auto login = BeginLogin(card_, bio_, pw_, id_, hasher_, rng_);
    auto accept = Authenticate(server_, login->message, hasher_, rng_);
    ASSERT_TRUE(accept.ok());
    AuthResponse tampered = accept->response;
    tampered.m12.FlipBit(rng_.Uniform(256));
    ClientSession session = login->session;
    auto key = VerifyServer(session, card_, tampered, server_.sid, hasher_);
    ASSERT_FALSE(key.ok());
    EXPECT_EQ(key.reason(), RejectReason::kServerAuthM12);
  }
}

TEST_F(ImprovedTest, FlippedM11BitFailsFirstClientCheck) {
  auto login = BeginLogin(card_, bio_, pw_, id_, hasher_, rng_);
  auto accept = Authenticate(server_, login->message, hasher_, rng_);
  AuthResponse tampered = accept->response;
  tampered.m11.FlipBit(3);
  ClientSession session = login->session;
  auto key = VerifyServer(session, card_, tampered, server_.sid, hasher_);
  ASSERT_FALSE(key.ok());
  EXPECT_EQ(key.reason(), RejectReason::kServerAuthM14);
}

TEST_F(ImprovedTest, WrongOldPasswordLeavesCardUntouched) {
  const Card before = card_;
  auto updated = ChangePassword(card_, bio_, ToBytes("hunter3"),
                                ToBytes("new-secret"), hasher_);
  ASSERT_FALSE(updated.ok());
  EXPECT_EQ(updated.reason(), RejectReason::kWrongOldPassword);
  EXPECT_EQ(card_, before);
  EXPECT_TRUE(Exchange(card_, pw_).ok());
}

TEST_F(ImprovedTest, CorrectPasswordChangeReestablishesInvariants) {
  Bytes new_pw = ToBytes("new-secret");
  Card updated = ChangePassword(card_, bio_, pw_, new_pw, hasher_).value();
  EXPECT_EQ(updated.r, hasher_({hasher_({updated.n, new_pw}), updated.f}));
  EXPECT_EQ(updated.e ^ updated.r, HIdXs());
  EXPECT_TRUE(Exchange(updated, new_pw).ok());

  auto old_login = BeginLogin(updated, bio_, pw_, id_, hasher_, rng_);
  ASSERT_FALSE(old_login.ok());
  EXPECT_EQ(old_login.reason(), RejectReason::kWrongPassword);
}

TEST_F(ImprovedTest, PasswordChangeNeedsBiometric) {
  auto updated =
      ChangePassword(card_, ToBytes("mallory"), pw_, ToBytes("n"), hasher_);
  ASSERT_FALSE(updated.ok());
  EXPECT_EQ(updated.reason(), RejectReason::kBiometricMismatch);
}

TEST_F(ImprovedTest, StolenCardExtractionIdentity) {
  EXPECT_EQ(StolenCardExtract(card_), HIdXs());
  Card updated =
      ChangePassword(card_, bio_, pw_, ToBytes("rotated"), hasher_).value();
  EXPECT_EQ(StolenCardExtract(updated), HIdXs());
}

TEST(ImprovedPropertyTest, HonestKeyAgreementForRandomInputs) {
  Rng gen(88);
  for (int trial = 0; trial < 200; ++trial) {
    Hasher hasher;
    Rng rng(gen.NextU64());
    ServerState server;
    server.secrets = ServerSecrets::Generate(32, rng);
    server.sid = gen.NextBytes(1 + gen.Uniform(16));
    RegistrationCenter rc{server.secrets};
    Bytes id = ToBytes("id" + std::to_string(gen.NextU64()));
    Bytes pw = gen.NextBytes(1 + gen.Uniform(64));
    Bytes bio = gen.NextBytes(1 + gen.Uniform(128));
    Card card = Register(id, pw, bio, rc, hasher, rng).value();
    auto login = BeginLogin(card, bio, pw, id, hasher, rng);
    ASSERT_TRUE(login.ok());
    auto accept = Authenticate(server, login->message, hasher, rng);
    ASSERT_TRUE(accept.ok());
    ClientSession session = login->session;
    auto key =
        VerifyServer(session, card, accept->response, server.sid, hasher);
    ASSERT_TRUE(key.ok());
    EXPECT_EQ(*key, accept->session.key);
    EXPECT_EQ(*session.m13, accept->session.r_s);
  }
}

// With identical inputs and randomness both schemes accept honest runs, and
// a wrong password is caught locally here but only server-side in baseline.
TEST(ImprovedDifferentialTest, VerdictsAgainstBaseline) {
  Rng gen(5150);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t seed = gen.NextU64();
    Bytes id = ToBytes("carol");
    Bytes pw = ToBytes("pw-" + std::to_string(trial));
    Bytes bio = gen.NextBytes(32);

    Rng rb(seed), ri(seed);
    Hasher hb, hi;
    ServerState sb, si;
    sb.secrets = si.secrets = ServerSecrets::Generate(32, gen);
    sb.sid = si.sid = ToBytes("srv");
    baseline::Card cb =
        baseline::Register(id, pw, bio, RegistrationCenter{sb.secrets}, hb, rb)
            .value();
    Card ci = Register(id, pw, bio, RegistrationCenter{si.secrets}, hi, ri)
                  .value();

    auto lb = baseline::BeginLogin(cb, bio, pw, id, hb, rb);
    auto li = BeginLogin(ci, bio, pw, id, hi, ri);
    ASSERT_TRUE(lb.ok());
    ASSERT_TRUE(li.ok());
    EXPECT_EQ(lb->message.m2, li->message.m2);
    EXPECT_TRUE(baseline::Authenticate(sb, lb->message, hb, rb).ok());
    EXPECT_TRUE(Authenticate(si, li->message, hi, ri).ok());

    Bytes wrong = ToBytes("not-" + std::to_string(trial));
    auto wb = baseline::BeginLogin(cb, bio, wrong, id, hb, rb);
    ASSERT_TRUE(wb.ok());
    EXPECT_EQ(baseline::Authenticate(sb, wb->message, hb, rb).reason(),
              RejectReason::kAuthM5);
    EXPECT_EQ(BeginLogin(ci, bio, wrong, id, hi, ri).reason(),
              RejectReason::kWrongPassword);
  }
}

TEST(ImprovedHashCountTest, TwoMoreInvocationsThanBaseline) {
  Rng rng(9);
  ServerState server;
  server.secrets = ServerSecrets::Generate(32, rng);
  server.sid = ToBytes("srv");
  RegistrationCenter rc{server.secrets};
  Bytes id = ToBytes("dave"), pw = ToBytes("pw"), bio = ToBytes("bio");
  Hasher reg;
  baseline::Card cb = baseline::Register(id, pw, bio, rc, reg, rng).value();
  Card ci = Register(id, pw, bio, rc, reg, rng).value();

  Hasher hb;
  {
    auto login = baseline::BeginLogin(cb, bio, pw, id, hb, rng);
    auto accept = baseline::Authenticate(server, login->message, hb, rng);
    baseline::ClientSession s = login->session;
    ASSERT_TRUE(
        baseline::VerifyServer(s, cb, accept->response, server.sid, hb).ok());
  }
  Hasher hi;
  {
    auto login = BeginLogin(ci, bio, pw, id, hi, rng);
    auto accept = Authenticate(server, login->message, hi, rng);
    ClientSession s = login->session;
    ASSERT_TRUE(VerifyServer(s, ci, accept->response, server.sid, hi).ok());
  }
  EXPECT_EQ(hi.counter().count - hb.counter().count, 2u);
  EXPECT_EQ(hb.counter().biometric, 1u);
  EXPECT_EQ(hi.counter().biometric, 1u);
}

}  // namespace
}  // namespace smartauth::improved
