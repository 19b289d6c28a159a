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

#ifndef CRYPTVAULT_MODES_H_
#define CRYPTVAULT_MODES_H_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>

#include "cryptvault/bytes.h"
#include "cryptvault/errors.h"

namespace cryptvault {

template <typename C>
concept BlockCipher = requires(const C& c, const std::uint8_t* in,
                               std::uint8_t* out, ByteSpan s,
                               MutableByteSpan m) {
  { C::kBlockBytes } -> std::convertible_to<std::size_t>;
  c.EncryptBlock(in, out);
  c.EncryptBlocks(s, m);
  c.DecryptBlocks(s, m);
};

// Appends k bytes of value k, 1 <= k <= block.
Bytes Pkcs7Pad(ByteSpan data, std::size_t block = 8);
// PaddingError unless data is a non-empty multiple of block ending in a
// well-formed trailer.
Bytes Pkcs7Unpad(ByteSpan data, std::size_t block = 8);

namespace detail {

template <BlockCipher C>
void CheckCbcArgs(ByteSpan iv, ByteSpan data) {
  if (iv.size() != C::kBlockBytes) {
    throw BlockLengthError("IV must be " + std::to_string(C::kBlockBytes) +
                           " bytes, got " + std::to_string(iv.size()));
  }
  if (data.size() % C::kBlockBytes != 0) {
    throw BlockLengthError("CBC input of " + std::to_string(data.size()) +
                           " bytes is not a whole number of blocks");
  }
}

}  // namespace detail

// Chained encryption is inherently serial: one block at a time.
template <BlockCipher C>
Bytes CbcEncrypt(const C& cipher, ByteSpan iv, ByteSpan data) {
  constexpr std::size_t kB = C::kBlockBytes;
  detail::CheckCbcArgs<C>(iv, data);
  Bytes out(data.size());
  std::uint8_t chain[kB];
  for (std::size_t i = 0; i < kB; ++i) chain[i] = iv[i];
  for (std::size_t off = 0; off < data.size(); off += kB) {
    for (std::size_t i = 0; i < kB; ++i) chain[i] ^= data[off + i];
    cipher.EncryptBlock(chain, chain);
    for (std::size_t i = 0; i < kB; ++i) out[off + i] = chain[i];
  }
  return out;
}

// Decryption is not: every block goes through the multi-block kernel, then
// the previous ciphertext block (or the IV) is XORed in.
template <BlockCipher C>
Bytes CbcDecrypt(const C& cipher, ByteSpan iv, ByteSpan data) {
  constexpr std::size_t kB = C::kBlockBytes;
  detail::CheckCbcArgs<C>(iv, data);
  Bytes out(data.size());
  cipher.DecryptBlocks(data, out);
  for (std::size_t i = 0; i < kB && i < out.size(); ++i) out[i] ^= iv[i];
  for (std::size_t i = kB; i < out.size(); ++i) out[i] ^= data[i - kB];
  return out;
}

}  // namespace cryptvault

#endif  // CRYPTVAULT_MODES_H_
