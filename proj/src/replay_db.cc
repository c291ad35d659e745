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

#include "smartauth/replay_db.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>
#include <utility>

namespace smartauth {
namespace {

int HexNibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Freshness ReplayDb::CheckAndStore(ByteView id, const Digest& m7) {
  std::string key(id.begin(), id.end());
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), m7);
    return Freshness::kFresh;
  }
  if (it->second == m7) return Freshness::kReplayed;
  it->second = m7;
  return Freshness::kFresh;
}

std::optional<Digest> ReplayDb::Lookup(ByteView id) const {
  auto it = entries_.find(std::string(id.begin(), id.end()));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

ReplayDb ReplayDb::FromMap(Map entries) {
  ReplayDb db;
  db.entries_ = std::move(entries);
  return db;
}

SnapshotParseError::SnapshotParseError(std::size_t line,
                                       const std::string& what)
    : std::runtime_error("replay-db snapshot line " + std::to_string(line) +
                         ": " + what),
      line_(line) {}

std::string EscapeId(ByteView id) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t c : id) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (c < 0x20 || c > 0x7e) {
          out += "\\x";
          out.push_back(kDigits[c >> 4]);
          out.push_back(kDigits[c & 0x0f]);
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out;
}

std::optional<std::string> UnescapeId(std::string_view escaped) {
  std::string out;
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    char c = escaped[i];
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (++i >= escaped.size()) return std::nullopt;
    switch (escaped[i]) {
      case '\\':
        out.push_back('\\');
        break;
      case 't':
        out.push_back('\t');
        break;
      case 'n':
        out.push_back('\n');
        break;
      case 'r':
        out.push_back('\r');
        break;
      case 'x': {
        if (i + 2 >= escaped.size()) return std::nullopt;
        int hi = HexNibble(escaped[i + 1]);
        int lo = HexNibble(escaped[i + 2]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<char>((hi << 4) | lo));
        i += 2;
        break;
      }
      default:
        return std::nullopt;
    }
  }
  return out;
}

void WriteReplayDbSnapshot(const ReplayDb& db, std::ostream& out) {
  out << kReplayDbHeader << '\n';
  // std::map iteration is already sorted by the raw ID bytes.
  for (const auto& [id, m7] : db.entries()) {
    const auto* data = reinterpret_cast<const std::uint8_t*>(id.data());
    out << EscapeId(ByteView(data, id.size())) << '\t' << m7.hex() << '\n';
  }
}

ReplayDb ReadReplayDbSnapshot(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) {
    throw SnapshotParseError(line_no, "missing header");
  }
  if (line != kReplayDbHeader) {
    throw SnapshotParseError(line_no, "unexpected header '" + line + "'");
  }
  ReplayDb::Map entries;
  std::optional<std::string> previous;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw SnapshotParseError(line_no, "expected <ID>\\t<M_7 hex>");
    }
    auto id = UnescapeId(std::string_view(line).substr(0, tab));
    if (!id || id->empty()) {
      throw SnapshotParseError(line_no, "invalid ID escape");
    }
    std::string_view hex = std::string_view(line).substr(tab + 1);
    Digest m7;
    try {
      m7 = Digest::FromHex(hex);
    } catch (const std::invalid_argument& e) {
      throw SnapshotParseError(line_no, std::string("bad M_7 hex: ") +
                                            e.what());
    }
    if (m7.empty()) throw SnapshotParseError(line_no, "empty M_7");
    if (width == 0) width = m7.size();
    if (m7.size() != width) {
      throw SnapshotParseError(line_no, "M_7 width differs from earlier lines");
    }
    if (entries.contains(*id)) {
      throw SnapshotParseError(line_no, "duplicate ID '" +
                                            std::string(line.substr(0, tab)) +
                                            "'");
    }
    if (previous && *id < *previous) {
      throw SnapshotParseError(line_no, "entries not sorted by ID");
    }
    previous = *id;
    entries.emplace(std::move(*id), std::move(m7));
  }
  return ReplayDb::FromMap(std::move(entries));
}

void SnapshotReplayDb(const ReplayDb& db, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::filesystem::filesystem_error(
        "cannot open replay-db snapshot for writing", path,
        std::make_error_code(std::errc::io_error));
  }
  WriteReplayDbSnapshot(db, out);
  out.flush();
  if (!out) {
    throw std::filesystem::filesystem_error(
        "failed writing replay-db snapshot", path,
        std::make_error_code(std::errc::io_error));
  }
}

ReplayDb LoadReplayDb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::filesystem::filesystem_error(
        "cannot open replay-db snapshot", path,
        std::make_error_code(std::errc::no_such_file_or_directory));
  }
  return ReadReplayDbSnapshot(in);
}

}  // namespace smartauth
