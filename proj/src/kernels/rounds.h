/*
 * Copyright 2026 The cryptvault Authors.
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

#ifndef CRYPTVAULT_SRC_KERNELS_ROUNDS_H_
#define CRYPTVAULT_SRC_KERNELS_ROUNDS_H_

#include <bit>
#include <cstdint>

#include "des_tables.h"

namespace cryptvault::kernels {

inline std::uint32_t BlowfishF(const std::uint32_t* s, std::uint32_t x) {
  return ((s[x >> 24] + s[256 + ((x >> 16) & 0xFF)]) ^
          s[512 + ((x >> 8) & 0xFF)]) +
         s[768 + (x & 0xFF)];
}

// Sixteen rounds plus the two output whitening XORs. The per-round swap is
// folded away by alternating which half plays "left".
inline void BlowfishRounds(const std::uint32_t* p, const std::uint32_t* s,
                           std::uint32_t& left, std::uint32_t& right) {
  std::uint32_t l = left;
  std::uint32_t r = right;
  for (int i = 0; i < 16; i += 2) {
    l ^= p[i];
    r ^= BlowfishF(s, l);
    r ^= p[i + 1];
    l ^= BlowfishF(s, r);
  }
  l ^= p[16];
  r ^= p[17];
  left = r;
  right = l;
}

// Six-bit E-expansion group `j` of a 32-bit half: FIPS bits 4j..4j+5
// (1-based, bit 0 meaning bit 32).
inline std::uint32_t DesExpandGroup(std::uint32_t r, int j) {
  return std::rotl(r, (4 * j + 31) % 32) >> 26;
}

inline std::uint32_t DesF(std::uint32_t r, const std::uint8_t* k) {
  std::uint32_t out = 0;
  for (int j = 0; j < 8; ++j) {
    out |= des::detail::kSp[j][DesExpandGroup(r, j) ^ k[j]];
  }
  return out;
}

inline std::uint64_t DesRounds(const std::uint8_t* groups, std::uint64_t ip) {
  std::uint32_t l = static_cast<std::uint32_t>(ip >> 32);
  std::uint32_t r = static_cast<std::uint32_t>(ip);
  for (int round = 0; round < 16; ++round) {
    const std::uint32_t next = l ^ DesF(r, groups + 8 * round);
    l = r;
    r = next;
  }
  // Pre-output is R16 || L16: the last round does not swap.
  return (std::uint64_t{r} << 32) | l;
}

}  // namespace cryptvault::kernels

#endif  // CRYPTVAULT_SRC_KERNELS_ROUNDS_H_
