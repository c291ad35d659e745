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

#include "smartauth/baseline.h"

#include <stdexcept>
#include <utility>

#include "smartauth/identity.h"

namespace smartauth::baseline {
namespace {

bool BiometricMatches(const Card& card, ByteView sample, Hasher& hasher) {
  return hasher.HashBiometric(sample) == card.f;
}

// r_i = h(h(N || PW) || f_i)
Digest PasswordVerifier(const Card& card, const Digest& rpw, Hasher& hasher) {
  return hasher({rpw, card.f});
}

}  // namespace

Outcome<Card> Register(ByteView id, ByteView password, ByteView biometric,
                       const RegistrationCenter& rc, Hasher& hasher,
                       Rng& rng) {
  if (!IsWellFormedId(id)) return RejectReason::kMalformedId;
  if (!IsAcceptablePassword(password)) {
    throw std::invalid_argument("password must be 1-64 bytes");
  }
  Card card;
  card.n = rng.NextBytes(kCardNonceSize);
  Digest rpw = hasher({card.n, password});
  card.f = hasher({biometric});
  Digest r = hasher({rpw, card.f});
  card.e = hasher({id, rc.secrets.master_key}) ^ r;
  card.y = rc.secrets.y;
  return card;
}

Outcome<Login> BeginLogin(const Card& card, ByteView biometric,
                          ByteView password, ByteView id, const Digest& r_c,
                          Hasher& hasher) {
  if (!BiometricMatches(card, biometric, hasher)) {
    return RejectReason::kBiometricMismatch;
  }
  Login login;
  ClientSession& s = login.session;
  s.rpw = hasher({card.n, password});
  s.m1 = card.e ^ PasswordVerifier(card, s.rpw, hasher);
  s.r_c = r_c;
  s.m3 = hasher({card.y, r_c});

  LoginMessage& m = login.message;
  m.id.assign(id.begin(), id.end());
  m.m2 = s.m1 ^ r_c;
  m.m4 = s.rpw ^ s.m3;
  m.m5 = hasher({m.m2, s.m3, m.m4});
  return login;
}

Outcome<Login> BeginLogin(const Card& card, ByteView biometric,
                          ByteView password, ByteView id, Hasher& hasher,
                          Rng& rng) {
  Digest r_c = rng.NextDigest(hasher.digest_size());
  return BeginLogin(card, biometric, password, id, r_c, hasher);
}

Outcome<ServerAccept> Authenticate(ServerState& server,
                                   const LoginMessage& message,
                                   const Digest& r_s, Hasher& hasher) {
  if (!IsWellFormedId(message.id)) return RejectReason::kMalformedId;
  const Digest& x_s = server.secrets.master_key;
  const Digest& y = server.secrets.y;

  ServerAccept accept;
  ServerSession& s = accept.session;
  s.m6 = hasher({message.id, x_s});
  s.m7 = message.m2 ^ s.m6;
  s.m8 = hasher({y, s.m7});
  if (message.m5 != hasher({message.m2, s.m8, message.m4})) {
    return RejectReason::kAuthM5;
  }
  if (server.replay_db.CheckAndStore(message.id, s.m7) ==
      Freshness::kReplayed) {
    return RejectReason::kReplay;
  }
  s.m9 = message.m4 ^ s.m8;
  s.r_s = r_s;
  accept.response.m10 = hasher({s.m9, server.sid, y}) ^ s.m8 ^ r_s;
  accept.response.m11 = hasher({s.m6, s.m9, y, r_s});
  s.key = SessionKey{hasher({s.m9, s.m8, r_s, server.sid})};
  return accept;
}

Outcome<ServerAccept> Authenticate(ServerState& server,
                                   const LoginMessage& message, Hasher& hasher,
                                   Rng& rng) {
  Digest r_s = rng.NextDigest(hasher.digest_size());
  return Authenticate(server, message, r_s, hasher);
}

Outcome<SessionKey> VerifyServer(ClientSession& session, const Card& card,
                                 const AuthResponse& response, ByteView sid,
                                 Hasher& hasher) {
  Digest m12 = hasher({session.rpw, sid, card.y}) ^ session.m3 ^ response.m10;
  session.m12 = m12;
  if (response.m11 != hasher({session.m1, session.rpw, card.y, m12})) {
    return RejectReason::kServerAuthM11;
  }
  return SessionKey{hasher({session.rpw, session.m3, m12, sid})};
}

Outcome<Card> ChangePassword(const Card& card, ByteView biometric,
                             ByteView old_password, ByteView new_password,
                             Hasher& hasher) {
  if (!BiometricMatches(card, biometric, hasher)) {
    return RejectReason::kBiometricMismatch;
  }
  if (!IsAcceptablePassword(new_password)) {
    throw std::invalid_argument("password must be 1-64 bytes");
  }
  Digest old_rpw = hasher({card.n, old_password});
  Digest unmasked = card.e ^ PasswordVerifier(card, old_rpw, hasher);
  Digest new_rpw = hasher({card.n, new_password});
  Card updated = card;
  updated.e = unmasked ^ PasswordVerifier(card, new_rpw, hasher);
  return updated;
}

std::size_t StoredBytes(const Card& card) {
  return card.f.size() + card.e.size() + card.y.size() + card.n.size();
}

}  // namespace smartauth::baseline
