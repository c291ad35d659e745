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

#ifndef SMARTAUTH_ACTORS_H_
#define SMARTAUTH_ACTORS_H_

#include "smartauth/bytes.h"
#include "smartauth/digest.h"
#include "smartauth/replay_db.h"
#include "smartauth/rng.h"

namespace smartauth {

// Long-term secrets shared by the registration center and the server.
struct ServerSecrets {
  Digest master_key;  // X_s
  Digest y;

  static ServerSecrets Generate(std::size_t digest_size, Rng& rng);
};

// The registration center keeps only {X_s, y}; it holds no per-user record.
struct RegistrationCenter {
  ServerSecrets secrets;
};

struct ServerState {
  ServerSecrets secrets;
  Bytes sid;  // SID_i
  ReplayDb replay_db;
};

inline ServerSecrets ServerSecrets::Generate(std::size_t digest_size,
                                             Rng& rng) {
  ServerSecrets s;
  s.master_key = rng.NextDigest(digest_size);
  s.y = rng.NextDigest(digest_size);
  return s;
}

}  // namespace smartauth

#endif  // SMARTAUTH_ACTORS_H_
