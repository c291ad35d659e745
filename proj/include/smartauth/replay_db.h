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

#ifndef SMARTAUTH_REPLAY_DB_H_
#define SMARTAUTH_REPLAY_DB_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "smartauth/bytes.h"
#include "smartauth/digest.h"

namespace smartauth {

enum class Freshness { kFresh, kReplayed };

// Server-side map ID_i -> last accepted M_7. One entry per identity; entries
// are never expired.
class ReplayDb {
 public:
  using Map = std::map<std::string, Digest>;

  // Must be called only after the authentication checks passed. Stores or
  // replaces the entry unless it already equals `m7`.
  Freshness CheckAndStore(ByteView id, const Digest& m7);

  std::optional<Digest> Lookup(ByteView id) const;
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  friend bool operator==(const ReplayDb&, const ReplayDb&) = default;

  static ReplayDb FromMap(Map entries);

 private:
  Map entries_;
};

class SnapshotParseError : public std::runtime_error {
 public:
  SnapshotParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::string_view kReplayDbHeader = "smartauth-replaydb v1";

// Line format: header, then `<escaped ID>\t<M_7 hex>` per entry sorted by ID.
void WriteReplayDbSnapshot(const ReplayDb& db, std::ostream& out);
ReplayDb ReadReplayDbSnapshot(std::istream& in);

// File wrappers. Throw std::filesystem::filesystem_error on I/O failure.
void SnapshotReplayDb(const ReplayDb& db, const std::filesystem::path& path);
ReplayDb LoadReplayDb(const std::filesystem::path& path);

// Backslash escaping for IDs: `\\`, `\t`, `\n`, `\r` and `\xHH` for any other
// byte outside printable ASCII.
std::string EscapeId(ByteView id);
std::optional<std::string> UnescapeId(std::string_view escaped);

}  // namespace smartauth

#endif  // SMARTAUTH_REPLAY_DB_H_
