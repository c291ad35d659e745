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

#ifndef SMARTAUTH_IMPROVED_H_
#define SMARTAUTH_IMPROVED_H_

#include <optional>

#include "smartauth/actors.h"
#include "smartauth/bytes.h"
#include "smartauth/digest.h"
#include "smartauth/hash.h"
#include "smartauth/reject.h"
#include "smartauth/rng.h"

// The improved scheme. The card stores r_i and checks the entered password
// against it before any message is sent or any credential is rewritten. The
// login message carries M_3 and the response carries the extra M_11 = h(y||R_s)
// commitment.
namespace smartauth::improved {

inline constexpr std::size_t kCardNonceSize = 16;

struct Card {
  Digest f;  // h(B_i)
  Digest r;  // h(h(N || PW_i) || f_i)
  Digest e;  // h(ID_i || X_s) xor r_i
  Digest y;
  Bytes n;

  friend bool operator==(const Card&, const Card&) = default;
};

struct LoginMessage {
  Bytes id;
  Digest m2;
  Digest m3;
  Digest m4;
  Digest m5;

  friend bool operator==(const LoginMessage&, const LoginMessage&) = default;
};

struct AuthResponse {
  Digest m10;
  Digest m11;
  Digest m12;

  friend bool operator==(const AuthResponse&, const AuthResponse&) = default;
};

struct ClientSession {
  Digest rpw;
  Digest m1;
  Digest m3;
  Digest r_c;
  std::optional<Digest> m13;  // set by VerifyServer
  std::optional<Digest> m14;
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

Outcome<Card> Register(ByteView id, ByteView password, ByteView biometric,
                       const RegistrationCenter& rc, Hasher& hasher, Rng& rng);

// Rejects locally with kWrongPassword when h(h(N||PW)||f_i) != r_i; in that
// case no message exists to send.
Outcome<Login> BeginLogin(const Card& card, ByteView biometric,
                          ByteView password, ByteView id, const Digest& r_c,
                          Hasher& hasher);
Outcome<Login> BeginLogin(const Card& card, ByteView biometric,
                          ByteView password, ByteView id, Hasher& hasher,
                          Rng& rng);

// Checks, in order: ID format, M_8 == M_3, M_5, replay.
Outcome<ServerAccept> Authenticate(ServerState& server,
                                   const LoginMessage& message,
                                   const Digest& r_s, Hasher& hasher);
Outcome<ServerAccept> Authenticate(ServerState& server,
                                   const LoginMessage& message, Hasher& hasher,
                                   Rng& rng);

// Checks M_14 == M_11 first, then M_12.
Outcome<SessionKey> VerifyServer(ClientSession& session, const Card& card,
                                 const AuthResponse& response, ByteView sid,
                                 Hasher& hasher);

// Transactional: on kWrongOldPassword the input card is untouched and no
// replacement is produced.
Outcome<Card> ChangePassword(const Card& card, ByteView biometric,
                             ByteView old_password, ByteView new_password,
                             Hasher& hasher);

// Bytes of card memory holding protocol state (digests plus N).
std::size_t StoredBytes(const Card& card);

// What an attacker who reads the card memory learns: e_i xor r_i, which is
// h(ID_i || X_s).
Digest StolenCardExtract(const Card& card);

}  // namespace smartauth::improved

#endif  // SMARTAUTH_IMPROVED_H_
