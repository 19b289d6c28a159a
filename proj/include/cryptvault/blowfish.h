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

#ifndef CRYPTVAULT_BLOWFISH_H_
#define CRYPTVAULT_BLOWFISH_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "cryptvault/bytes.h"
#include "cryptvault/cpu.h"

namespace cryptvault::blowfish {

inline constexpr std::size_t kBlockSize = 8;
inline constexpr std::size_t kMinKeyBytes = 4;
inline constexpr std::size_t kMaxKeyBytes = 56;
inline constexpr std::size_t kRounds = 16;

// One 64-bit block as two 32-bit halves; byte form is big-endian.
struct Block64 {
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  static Block64 FromBytes(const std::uint8_t* in) {
    return {LoadBe32(in), LoadBe32(in + 4)};
  }
  static Block64 FromU64(std::uint64_t v) {
    return {static_cast<std::uint32_t>(v >> 32), static_cast<std::uint32_t>(v)};
  }
  void ToBytes(std::uint8_t* out) const {
    StoreBe32(left, out);
    StoreBe32(right, out + 4);
  }
  std::uint64_t ToU64() const {
    return (std::uint64_t{left} << 32) | right;
  }

  friend bool operator==(const Block64&, const Block64&) = default;
};

// The expanded key: 18 P-array subkeys and four 256-word S-boxes. Only
// ExpandKey() produces one, and it is read-only afterwards, so a schedule
// can be shared between threads.
class KeySchedule {
 public:
  std::span<const std::uint32_t, 18> p_array() const { return p_; }
  std::span<const std::uint32_t, 256> s_box(std::size_t i) const {
    return std::span<const std::uint32_t, 256>(s_.data() + 256 * i, 256);
  }

  // P-array in decryption order (P18 first).
  std::span<const std::uint32_t, 18> p_array_reversed() const {
    return p_reversed_;
  }
  // All four S-boxes back to back, S0 first.
  std::span<const std::uint32_t, 1024> s_boxes() const { return s_; }

  friend bool operator==(const KeySchedule&, const KeySchedule&) = default;

 private:
  friend KeySchedule ExpandKey(ByteSpan key);
  KeySchedule() = default;

  std::array<std::uint32_t, 18> p_{};
  std::array<std::uint32_t, 18> p_reversed_{};
  std::array<std::uint32_t, 1024> s_{};
};

// Pi-initialized tables, key XOR-folded into P, then 521 encryptions of a
// running block replace P and S in order. Throws KeyLengthError outside
// [4, 56] bytes.
KeySchedule ExpandKey(ByteSpan key);

// ((S0[a] + S1[b]) ^ S2[c]) + S3[d], with a the most significant byte.
std::uint32_t FFunction(const KeySchedule& ks, std::uint32_t x);

Block64 EncryptBlock(const KeySchedule& ks, Block64 b);
Block64 DecryptBlock(const KeySchedule& ks, Block64 b);

// ECB over whole blocks. in.size() must equal out.size() and be a
// multiple of 8 (BlockLengthError otherwise); in and out may alias.
void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out);
void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out);

// Same, pinned to a specific kernel. InvalidArgumentError if unavailable.
void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel);
void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel);

// Block-cipher handle for the CBC templates in modes.h.
class Cipher {
 public:
  static constexpr std::size_t kBlockBytes = kBlockSize;

  explicit Cipher(KeySchedule ks) : ks_(ks) {}
  explicit Cipher(ByteSpan key) : ks_(ExpandKey(key)) {}

  void EncryptBlock(const std::uint8_t* in, std::uint8_t* out) const {
    blowfish::EncryptBlock(ks_, Block64::FromBytes(in)).ToBytes(out);
  }
  void EncryptBlocks(ByteSpan in, MutableByteSpan out) const {
    blowfish::EncryptBlocks(ks_, in, out);
  }
  void DecryptBlocks(ByteSpan in, MutableByteSpan out) const {
    blowfish::DecryptBlocks(ks_, in, out);
  }

  const KeySchedule& schedule() const { return ks_; }

 private:
  KeySchedule ks_;
};

}  // namespace cryptvault::blowfish

#endif  // CRYPTVAULT_BLOWFISH_H_
