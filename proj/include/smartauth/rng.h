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

#ifndef SMARTAUTH_RNG_H_
#define SMARTAUTH_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include "smartauth/bytes.h"
#include "smartauth/digest.h"

namespace smartauth {

// Explicitly seeded deterministic generator. Output depends only on the seed
// and the draw sequence; raw engine words are used directly so results are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);
  Bytes NextBytes(std::size_t n);
  Digest NextDigest(std::size_t size) { return Digest(NextBytes(size)); }

  // Independent child generator seeded from this one.
  Rng Fork() { return Rng(NextU64()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace smartauth

#endif  // SMARTAUTH_RNG_H_
