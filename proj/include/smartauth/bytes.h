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

#ifndef SMARTAUTH_BYTES_H_
#define SMARTAUTH_BYTES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smartauth {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes ToBytes(std::string_view text);
std::string ToString(ByteView bytes);

// Lowercase hex, no prefix.
std::string ToHex(ByteView bytes);

// Throws std::invalid_argument on odd length or non-hex characters.
Bytes FromHex(std::string_view hex);

}  // namespace smartauth

#endif  // SMARTAUTH_BYTES_H_
