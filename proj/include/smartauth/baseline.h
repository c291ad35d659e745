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

#ifndef SMARTAUTH_BASELINE_H_
#define SMARTAUTH_BASELINE_H_

#include <optional>

#include "smartauth/actors.h"
#include "smartauth/bytes.h"
#include "smartauth/digest.h"
#include "smartauth/hash.h"
#include "smartauth/reject.h"
#include "smartauth/rng.h"

// The original biometric smart-card scheme, flaws included: the card never
// checks the password at login, and password change never checks the old
// password.
namespace smartauth::baseline {

inline constexpr std::size_t kCardNonceSize = 16;

struct Card {
  Digest f;  // h(B_i)
  Digest e;  // h(ID_i || X_s) xor r_i
  Digest y;
  Bytes n;   // N, 16 bytes

  friend bool operator==(const Card&, const Card&) = default;
};

struct LoginMessage {
  Bytes id;
  Digest m2;
  Digest m4;
  Digest m5;

  friend bool operator==(const LoginMessage&, const LoginMessage&) = default;
};

struct AuthResponse {
  Digest m10;
  Digest m11;

  friend bool operator==(const AuthResponse&, const AuthResponse&) = default;
};

struct ClientSession {
  Digest rpw;  // RPW_i = h(N || PW)
  Digest m1;
  Digest m3;   // h(y || R_c)
  Digest r_c;
  std::optional<Digest> m12;  // set by VerifyServer
};

struct ServerSession {
  Digest m6;
  Digest m7;
  Digest m8;
  Digest m9;
  Digest r_s;
  SessionKey key;
};

struct Login {
  LoginMessage message;
  ClientSession session;
};

struct ServerAccept {
  AuthResponse response;
  ServerSession session;
};

// Draws N from `rng`. Rejects with kMalformedId when the ID fails the format
// check; throws std::invalid_argument for an unacceptable password.
Outcome<Card> Register(ByteView id, ByteView password, ByteView biometric,
                       const RegistrationCenter& rc, Hasher& hasher, Rng& rng);

// Only the biometric gate can reject. Any password yields a login message.
Outcome<Login> BeginLogin(const Card& card, ByteView biometric,
                          ByteView password, ByteView id, const Digest& r_c,
                          Hasher& hasher);
Outcome<Login> BeginLogin(const Card& card, ByteView biometric,
                          ByteView password, ByteView id, Hasher& hasher,
                          Rng& rng);

// Server side of the authentication phase: format check, M_5 check, then
// replay check and store.
Outcome<ServerAccept> Authenticate(ServerState& server,
                                   const LoginMessage& message,
                                   const Digest& r_s, Hasher& hasher);
Outcome<ServerAccept> Authenticate(ServerState& server,
                                   const LoginMessage& message, Hasher& hasher,
                                   Rng& rng);

// Client side: computes M_12 (stored into `session`) and checks M_11.
Outcome<SessionKey> VerifyServer(ClientSession& session, const Card& card,
                                 const AuthResponse& response, ByteView sid,
                                 Hasher& hasher);

// Bytes of card memory holding protocol state (digests plus N).
std::size_t StoredBytes(const Card& card);

// Replaces e_i without checking the old password.
Outcome<Card> ChangePassword(const Card& card, ByteView biometric,
                             ByteView old_password, ByteView new_password,
                             Hasher& hasher);

}  // namespace smartauth::baseline

#endif  // SMARTAUTH_BASELINE_H_
