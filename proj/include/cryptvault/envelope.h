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

#ifndef CRYPTVAULT_ENVELOPE_H_
#define CRYPTVAULT_ENVELOPE_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cryptvault/bigint.h"
#include "cryptvault/bytes.h"
#include "cryptvault/paillier.h"
#include "cryptvault/random.h"
#include "cryptvault/rsa.h"
#include "cryptvault/sha256.h"

namespace cryptvault {

enum class Layer : std::uint8_t {
  kPaillier = 0x01,
  kBlowfishCbc = 0x02,
  kDesCbc = 0x03,
  kRsaKeywrap = 0x04,
};

// "PAILLIER", "BLOWFISH_CBC", "DES_CBC", "RSA_KEYWRAP".
std::string_view LayerName(Layer layer);
// Comma-joined names, outermost first; the inverse throws ParseError.
std::string FormatStack(const std::vector<Layer>& stack);
std::vector<Layer> ParseStack(std::string_view text);

inline const std::vector<Layer> kMultilevelStack = {Layer::kBlowfishCbc,
                                                    Layer::kPaillier};
inline const std::vector<Layer> kDesRsaStack = {Layer::kRsaKeywrap,
                                                Layer::kDesCbc};

// All-zero digest: the plaintext is unknown to whoever built the envelope
// (homomorphic sums), so decryptors skip the integrity comparison.
inline constexpr Digest kAbsentDigest{};

// Self-describing layered ciphertext. Wire layout, all integers big-endian:
//   "CVLT" | version(1) | stack_len(1) | tags | iv_len(1) | iv |
//   wrapped_key_len(2) | wrapped_key | chunk_size(2) | digest(32) |
//   body_len(8) | body
struct Envelope {
  static constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'V', 'L', 'T'};
  static constexpr std::uint8_t kVersion = 1;

  std::vector<Layer> layers;  // outermost first
  Bytes iv;
  Bytes wrapped_key;
  std::uint16_t chunk_size = 0;
  Digest digest{};
  Bytes body;

  bool has_digest() const { return digest != kAbsentDigest; }

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

Bytes Serialize(const Envelope& env);
// CorruptEnvelopeError on any structural violation, including trailing data.
Envelope Parse(ByteSpan data);

// Inner layer of a multilevel envelope: the Paillier ciphertexts of the
// plaintext chunks. Layout:
//   key_id(8) | plaintext_length(8) | count(4) | count x (len(4) | magnitude)
// key_id is the first 8 bytes of SHA-256 over the big-endian modulus.
struct PaillierBlob {
  std::array<std::uint8_t, 8> key_id{};
  std::uint64_t plaintext_length = 0;
  std::vector<BigInt> ciphertexts;

  friend bool operator==(const PaillierBlob&, const PaillierBlob&) = default;
};

std::array<std::uint8_t, 8> PaillierKeyId(const paillier::PublicKey& key);
Bytes SerializeBlob(const PaillierBlob& blob);
// CorruptEnvelopeError when malformed.
PaillierBlob ParseBlob(ByteSpan data);

// Plaintext chunks (big-endian integers) for a given chunk width.
std::vector<BigInt> ChunkPlaintext(ByteSpan plaintext, std::size_t chunk_bytes);

// Paillier layer first, then Blowfish-CBC under a fresh IV.
// KeyRangeError if the Paillier modulus is too small to carry a chunk;
// KeyLengthError for a bad Blowfish key.
Envelope EncryptMultilevel(ByteSpan plaintext, const paillier::PublicKey& pub,
                           ByteSpan blowfish_key, RandomSource& rng);

struct MultilevelPlaintext {
  Bytes data;
  // False when the envelope carried the absent-digest sentinel.
  bool integrity_checked = false;
};

// LayerStackError, PaddingError, IntegrityError, KeyMismatchError (blob
// made for another Paillier key), ChunkOverflowError (a chunk sum outgrew
// its width in an envelope without a digest).
MultilevelPlaintext DecryptMultilevel(const Envelope& env,
                                      const paillier::PrivateKey& priv,
                                      ByteSpan blowfish_key);

// Decrypted chunk values without reassembling bytes; works for any
// multilevel envelope including homomorphic sums.
std::vector<BigInt> DecryptMultilevelIntegers(const Envelope& env,
                                              const paillier::PrivateKey& priv,
                                              ByteSpan blowfish_key);

// Outer layer only. Needs the Blowfish key, never the Paillier key.
PaillierBlob UnwrapBlowfishLayer(const Envelope& env, ByteSpan blowfish_key);
Envelope WrapBlowfishLayer(const PaillierBlob& blob, std::uint16_t chunk_size,
                           const Digest& digest, ByteSpan blowfish_key,
                           RandomSource& rng);

// Chunkwise Paillier sum of two multilevel envelopes, re-wrapped under a
// fresh IV with the absent-digest sentinel. StackMismatchError,
// ChunkMismatchError, KeyMismatchError.
Envelope HomomorphicAdd(const Envelope& a, const Envelope& b,
                        const paillier::PublicKey& pub, ByteSpan blowfish_key,
                        RandomSource& rng);

// Fresh DES session key and IV; the key is RSA-wrapped. KeyRangeError
// unless n > 2^64.
Envelope EncryptDesRsa(ByteSpan plaintext, const rsa::PublicKey& pub,
                       RandomSource& rng);
// RSA unwrap, then DES-CBC. LayerStackError, KeyMismatchError,
// PaddingError, IntegrityError.
Bytes DecryptDesRsa(const Envelope& env, const rsa::KeyPair& priv);

}  // namespace cryptvault

#endif  // CRYPTVAULT_ENVELOPE_H_
