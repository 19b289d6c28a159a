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

#ifndef CRYPTVAULT_DES_H_
#define CRYPTVAULT_DES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "cryptvault/bytes.h"
#include "cryptvault/cpu.h"

namespace cryptvault::des {

inline constexpr std::size_t kBlockSize = 8;
inline constexpr std::size_t kKeySize = 8;
inline constexpr std::size_t kRounds = 16;

using Block = std::array<std::uint8_t, kBlockSize>;

// Sixteen 48-bit round keys (PC-1, shift schedule, PC-2). The low 48 bits
// of each word hold the key with FIPS bit 1 as bit 47.
class KeySchedule {
 public:
  std::span<const std::uint64_t, kRounds> subkeys() const { return subkeys_; }

  // Each subkey split into eight 6-bit S-box inputs, in encryption order
  // and in decryption order. This is the form the kernels consume.
  std::span<const std::uint8_t, kRounds * 8> encrypt_groups() const {
    return encrypt_groups_;
  }
  std::span<const std::uint8_t, kRounds * 8> decrypt_groups() const {
    return decrypt_groups_;
  }

  friend bool operator==(const KeySchedule&, const KeySchedule&) = default;

 private:
  friend KeySchedule ExpandKey(ByteSpan key);
  KeySchedule() = default;

  std::array<std::uint64_t, kRounds> subkeys_{};
  std::array<std::uint8_t, kRounds * 8> encrypt_groups_{};
  std::array<std::uint8_t, kRounds * 8> decrypt_groups_{};
};

// Throws KeyLengthError unless key is exactly 8 bytes. Parity bits (the
// low bit of each byte) are ignored.
KeySchedule ExpandKey(ByteSpan key);

// Throw BlockLengthError unless block is exactly 8 bytes.
Block EncryptBlock(const KeySchedule& ks, ByteSpan block);
Block DecryptBlock(const KeySchedule& ks, ByteSpan block);

std::uint64_t EncryptBlock(const KeySchedule& ks, std::uint64_t block);
std::uint64_t DecryptBlock(const KeySchedule& ks, std::uint64_t block);

// ECB over whole blocks; same contract as the Blowfish versions.
void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out);
void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out);
void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel);
void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel);

class Cipher {
 public:
  static constexpr std::size_t kBlockBytes = kBlockSize;

  explicit Cipher(KeySchedule ks) : ks_(ks) {}
  explicit Cipher(ByteSpan key) : ks_(ExpandKey(key)) {}

  void EncryptBlock(const std::uint8_t* in, std::uint8_t* out) const {
    StoreBe64(des::EncryptBlock(ks_, LoadBe64(in)), out);
  }
  void EncryptBlocks(ByteSpan in, MutableByteSpan out) const {
    des::EncryptBlocks(ks_, in, out);
  }
  void DecryptBlocks(ByteSpan in, MutableByteSpan out) const {
    des::DecryptBlocks(ks_, in, out);
  }

  const KeySchedule& schedule() const { return ks_; }

 private:
  KeySchedule ks_;
};

}  // namespace cryptvault::des

#endif  // CRYPTVAULT_DES_H_
