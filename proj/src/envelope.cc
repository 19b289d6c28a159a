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

#include "cryptvault/envelope.h"

#include <algorithm>
#include <limits>
#include <string>

#include "cryptvault/blowfish.h"
#include "cryptvault/des.h"
#include "cryptvault/errors.h"
#include "cryptvault/modes.h"

namespace cryptvault {
namespace {

// Bounds-checked cursor over untrusted bytes.
class Reader {
 public:
  Reader(ByteSpan data, const char* what) : data_(data), what_(what) {}

  ByteSpan Take(std::uint64_t n) {
    if (n > data_.size() - pos_) {
      throw CorruptEnvelopeError(std::string(what_) + " is truncated");
    }
    ByteSpan out = data_.subspan(pos_, static_cast<std::size_t>(n));
    pos_ += static_cast<std::size_t>(n);
    return out;
  }
  std::uint8_t U8() { return Take(1)[0]; }
  std::uint16_t U16() {
    ByteSpan b = Take(2);
    return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
  }
  std::uint32_t U32() { return LoadBe32(Take(4).data()); }
  std::uint64_t U64() { return LoadBe64(Take(8).data()); }

  void ExpectEnd() const {
    if (pos_ != data_.size()) {
      throw CorruptEnvelopeError(std::string(what_) + " has trailing bytes");
    }
  }

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
  const char* what_;
};

void PutU16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void PutU32(Bytes& out, std::uint32_t v) {
  std::uint8_t b[4];
  StoreBe32(v, b);
  out.insert(out.end(), b, b + 4);
}

void PutU64(Bytes& out, std::uint64_t v) {
  std::uint8_t b[8];
  StoreBe64(v, b);
  out.insert(out.end(), b, b + 8);
}

bool IsCbc(Layer layer) {
  return layer == Layer::kBlowfishCbc || layer == Layer::kDesCbc;
}

bool HasLayer(const std::vector<Layer>& stack, Layer layer) {
  return std::find(stack.begin(), stack.end(), layer) != stack.end();
}

void RequireStack(const Envelope& env, const std::vector<Layer>& want,
                  const char* pipeline) {
  if (env.layers != want) {
    throw LayerStackError(std::string(pipeline) + " expects layer stack [" +
                          FormatStack(want) + "], envelope has [" +
                          FormatStack(env.layers) + "]");
  }
}

Bytes RandomIv(RandomSource& rng) { return rng.Generate(8); }

// Decrypts the Paillier chunk values of a multilevel envelope after all
// structural checks.
struct OpenedBlob {
  PaillierBlob blob;
  std::vector<BigInt> values;
};

OpenedBlob OpenMultilevel(const Envelope& env,
                          const paillier::PrivateKey& priv,
                          ByteSpan blowfish_key) {
  PaillierBlob blob = UnwrapBlowfishLayer(env, blowfish_key);
  if (blob.key_id != PaillierKeyId(priv.pub)) {
    throw KeyMismatchError(
        "envelope was encrypted for a different Paillier key");
  }
  const std::size_t chunk = priv.pub.ChunkBytes();
  if (env.chunk_size != chunk) {
    throw IntegrityError("chunk size " + std::to_string(env.chunk_size) +
                         " does not match the key's " + std::to_string(chunk));
  }
  const std::uint64_t want = (blob.plaintext_length + chunk - 1) / chunk;
  if (blob.ciphertexts.size() != want) {
    throw IntegrityError("chunk count does not match plaintext length");
  }
  OpenedBlob out{std::move(blob), {}};
  out.values.reserve(out.blob.ciphertexts.size());
  for (std::size_t i = 0; i < out.blob.ciphertexts.size(); ++i) {
    try {
      out.values.push_back(paillier::Decrypt(priv, out.blob.ciphertexts[i]));
    } catch (const CiphertextRangeError& e) {
      throw IntegrityError("Paillier ciphertext " + std::to_string(i) +
                           " is invalid: " + e.what());
    }
  }
  return out;
}

}  // namespace

std::string_view LayerName(Layer layer) {
  switch (layer) {
    case Layer::kPaillier:
      return "PAILLIER";
    case Layer::kBlowfishCbc:
      return "BLOWFISH_CBC";
    case Layer::kDesCbc:
      return "DES_CBC";
    case Layer::kRsaKeywrap:
      return "RSA_KEYWRAP";
  }
  return "UNKNOWN";
}

std::string FormatStack(const std::vector<Layer>& stack) {
  std::string out;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    if (i) out += ',';
    out += LayerName(stack[i]);
  }
  return out;
}

std::vector<Layer> ParseStack(std::string_view text) {
  std::vector<Layer> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view name = text.substr(0, comma);
    bool found = false;
    for (Layer l : {Layer::kPaillier, Layer::kBlowfishCbc, Layer::kDesCbc,
                    Layer::kRsaKeywrap}) {
      if (LayerName(l) == name) {
        out.push_back(l);
        found = true;
      }
    }
    if (!found) throw ParseError("unknown layer '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ParseError("empty layer stack");
  return out;
}

Bytes Serialize(const Envelope& env) {
  if (env.layers.empty() || env.layers.size() > 255) {
    throw InvalidArgumentError("layer stack must hold 1..255 layers");
  }
  if (env.iv.size() > 255 || env.wrapped_key.size() > 0xFFFF) {
    throw InvalidArgumentError("IV or wrapped key too long");
  }
  Bytes out(Envelope::kMagic.begin(), Envelope::kMagic.end());
  out.reserve(64 + env.iv.size() + env.wrapped_key.size() + env.body.size());
  out.push_back(Envelope::kVersion);
  out.push_back(static_cast<std::uint8_t>(env.layers.size()));
  for (Layer l : env.layers) out.push_back(static_cast<std::uint8_t>(l));
  out.push_back(static_cast<std::uint8_t>(env.iv.size()));
  out.insert(out.end(), env.iv.begin(), env.iv.end());
  PutU16(out, static_cast<std::uint16_t>(env.wrapped_key.size()));
  out.insert(out.end(), env.wrapped_key.begin(), env.wrapped_key.end());
  PutU16(out, env.chunk_size);
  out.insert(out.end(), env.digest.begin(), env.digest.end());
  PutU64(out, env.body.size());
  out.insert(out.end(), env.body.begin(), env.body.end());
  return out;
}

Envelope Parse(ByteSpan data) {
  Reader in(data, "envelope");
  ByteSpan magic = in.Take(4);
  if (!std::equal(magic.begin(), magic.end(), Envelope::kMagic.begin())) {
    throw CorruptEnvelopeError("bad envelope magic");
  }
  if (const std::uint8_t v = in.U8(); v != Envelope::kVersion) {
    throw CorruptEnvelopeError("unsupported envelope version " +
                               std::to_string(v));
  }
  Envelope env;
  const std::uint8_t stack_len = in.U8();
  if (stack_len == 0) throw CorruptEnvelopeError("empty layer stack");
  for (std::uint8_t tag : in.Take(stack_len)) {
    if (tag < 0x01 || tag > 0x04) {
      throw CorruptEnvelopeError("unknown layer tag " + std::to_string(tag));
    }
    env.layers.push_back(static_cast<Layer>(tag));
  }
  const bool has_cbc = std::any_of(env.layers.begin(), env.layers.end(), IsCbc);
  ByteSpan iv = in.Take(in.U8());
  if (iv.size() != (has_cbc ? 8u : 0u)) {
    throw CorruptEnvelopeError("IV length " + std::to_string(iv.size()) +
                               " does not match the layer stack");
  }
  env.iv.assign(iv.begin(), iv.end());
  ByteSpan wrapped = in.Take(in.U16());
  if (wrapped.empty() == HasLayer(env.layers, Layer::kRsaKeywrap)) {
    throw CorruptEnvelopeError("wrapped key length " +
                               std::to_string(wrapped.size()) +
                               " does not match the layer stack");
  }
  env.wrapped_key.assign(wrapped.begin(), wrapped.end());
  env.chunk_size = in.U16();
  if ((env.chunk_size == 0) == HasLayer(env.layers, Layer::kPaillier)) {
    throw CorruptEnvelopeError("chunk size " + std::to_string(env.chunk_size) +
                               " does not match the layer stack");
  }
  ByteSpan digest = in.Take(32);
  std::copy(digest.begin(), digest.end(), env.digest.begin());
  ByteSpan body = in.Take(in.U64());
  if (IsCbc(env.layers.front()) && body.size() % 8 != 0) {
    throw CorruptEnvelopeError("CBC body is not a whole number of blocks");
  }
  env.body.assign(body.begin(), body.end());
  in.ExpectEnd();
  return env;
}

std::array<std::uint8_t, 8> PaillierKeyId(const paillier::PublicKey& key) {
  const Digest d = Sha256(ToBytes(key.n()));
  std::array<std::uint8_t, 8> id;
  std::copy_n(d.begin(), 8, id.begin());
  return id;
}

Bytes SerializeBlob(const PaillierBlob& blob) {
  if (blob.ciphertexts.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgumentError("too many ciphertexts for one blob");
  }
  Bytes out(blob.key_id.begin(), blob.key_id.end());
  PutU64(out, blob.plaintext_length);
  PutU32(out, static_cast<std::uint32_t>(blob.ciphertexts.size()));
  for (const BigInt& c : blob.ciphertexts) {
    const Bytes mag = ToBytes(c);
    PutU32(out, static_cast<std::uint32_t>(mag.size()));
    out.insert(out.end(), mag.begin(), mag.end());
  }
  return out;
}

PaillierBlob ParseBlob(ByteSpan data) {
  Reader in(data, "Paillier blob");
  PaillierBlob blob;
  ByteSpan id = in.Take(8);
  std::copy(id.begin(), id.end(), blob.key_id.begin());
  blob.plaintext_length = in.U64();
  const std::uint32_t count = in.U32();
  // Each ciphertext needs at least its 4-byte length.
  if (count > data.size() / 4) {
    throw CorruptEnvelopeError("Paillier blob count exceeds its size");
  }
  blob.ciphertexts.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    blob.ciphertexts.push_back(FromBytes(in.Take(in.U32())));
  }
  in.ExpectEnd();
  return blob;
}

std::vector<BigInt> ChunkPlaintext(ByteSpan plaintext, std::size_t chunk_bytes) {
  if (chunk_bytes == 0) throw InvalidArgumentError("chunk width is zero");
  std::vector<BigInt> out;
  out.reserve((plaintext.size() + chunk_bytes - 1) / chunk_bytes);
  for (std::size_t off = 0; off < plaintext.size(); off += chunk_bytes) {
    out.push_back(FromBytes(plaintext.subspan(
        off, std::min(chunk_bytes, plaintext.size() - off))));
  }
  return out;
}

PaillierBlob UnwrapBlowfishLayer(const Envelope& env, ByteSpan blowfish_key) {
  RequireStack(env, kMultilevelStack, "multilevel");
  const blowfish::Cipher cipher(blowfish_key);
  const Bytes padded = CbcDecrypt(cipher, env.iv, env.body);
  const Bytes inner = Pkcs7Unpad(padded);
  try {
    return ParseBlob(inner);
  } catch (const CorruptEnvelopeError& e) {
    // Valid padding over a malformed layer: wrong key or altered body.
    throw IntegrityError(std::string("inner layer is malformed (") + e.what() +
                         ")");
  }
}

Envelope WrapBlowfishLayer(const PaillierBlob& blob, std::uint16_t chunk_size,
                           const Digest& digest, ByteSpan blowfish_key,
                           RandomSource& rng) {
  const blowfish::Cipher cipher(blowfish_key);
  Envelope env;
  env.layers = kMultilevelStack;
  env.iv = RandomIv(rng);
  env.chunk_size = chunk_size;
  env.digest = digest;
  env.body = CbcEncrypt(cipher, env.iv, Pkcs7Pad(SerializeBlob(blob)));
  return env;
}

Envelope EncryptMultilevel(ByteSpan plaintext, const paillier::PublicKey& pub,
                           ByteSpan blowfish_key, RandomSource& rng) {
  const std::size_t chunk = pub.ChunkBytes();
  if (chunk == 0 || chunk > 0xFFFF) {
    throw KeyRangeError("Paillier modulus of " +
                        std::to_string(BitLength(pub.n())) +
                        " bits cannot carry plaintext chunks");
  }
  // Fail on a bad Blowfish key before the expensive layer.
  const blowfish::Cipher check(blowfish_key);
  (void)check;

  PaillierBlob blob;
  blob.key_id = PaillierKeyId(pub);
  blob.plaintext_length = plaintext.size();
  for (const BigInt& m : ChunkPlaintext(plaintext, chunk)) {
    blob.ciphertexts.push_back(paillier::Encrypt(pub, m, rng));
  }
  return WrapBlowfishLayer(blob, static_cast<std::uint16_t>(chunk),
                           Sha256(plaintext), blowfish_key, rng);
}

MultilevelPlaintext DecryptMultilevel(const Envelope& env,
                                      const paillier::PrivateKey& priv,
                                      ByteSpan blowfish_key) {
  const OpenedBlob opened = OpenMultilevel(env, priv, blowfish_key);
  const std::size_t chunk = env.chunk_size;
  const std::uint64_t total = opened.blob.plaintext_length;

  MultilevelPlaintext out;
  out.data.reserve(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < opened.values.size(); ++i) {
    const std::size_t width =
        static_cast<std::size_t>(std::min<std::uint64_t>(chunk, total - i * chunk));
    if (ByteLength(opened.values[i]) > width) {
      const std::string msg = "chunk " + std::to_string(i) + " exceeds " +
                              std::to_string(width) + " bytes";
      if (env.has_digest()) throw IntegrityError(msg);
      throw ChunkOverflowError(msg + "; read it as integers instead");
    }
    const Bytes bytes = ToBytes(opened.values[i], width);
    out.data.insert(out.data.end(), bytes.begin(), bytes.end());
  }
  if (env.has_digest()) {
    if (Sha256(out.data) != env.digest) {
      throw IntegrityError("plaintext digest mismatch");
    }
    out.integrity_checked = true;
  }
  return out;
}

std::vector<BigInt> DecryptMultilevelIntegers(const Envelope& env,
                                              const paillier::PrivateKey& priv,
                                              ByteSpan blowfish_key) {
  return OpenMultilevel(env, priv, blowfish_key).values;
}

Envelope HomomorphicAdd(const Envelope& a, const Envelope& b,
                        const paillier::PublicKey& pub, ByteSpan blowfish_key,
                        RandomSource& rng) {
  for (const Envelope* env : {&a, &b}) {
    if (env->layers != kMultilevelStack) {
      throw StackMismatchError("homomorphic add needs [" +
                               FormatStack(kMultilevelStack) +
                               "] envelopes, got [" +
                               FormatStack(env->layers) + "]");
    }
  }
  if (a.chunk_size != b.chunk_size || a.chunk_size != pub.ChunkBytes()) {
    throw ChunkMismatchError("chunk sizes differ");
  }
  const PaillierBlob blob_a = UnwrapBlowfishLayer(a, blowfish_key);
  const PaillierBlob blob_b = UnwrapBlowfishLayer(b, blowfish_key);
  const auto id = PaillierKeyId(pub);
  if (blob_a.key_id != id || blob_b.key_id != id) {
    throw KeyMismatchError("envelopes were not made under this Paillier key");
  }
  if (blob_a.ciphertexts.size() != blob_b.ciphertexts.size()) {
    throw ChunkMismatchError(
        "chunk counts differ: " + std::to_string(blob_a.ciphertexts.size()) +
        " vs " + std::to_string(blob_b.ciphertexts.size()));
  }
  PaillierBlob sum;
  sum.key_id = id;
  sum.plaintext_length = std::max(blob_a.plaintext_length, blob_b.plaintext_length);
  sum.ciphertexts.reserve(blob_a.ciphertexts.size());
  for (std::size_t i = 0; i < blob_a.ciphertexts.size(); ++i) {
    sum.ciphertexts.push_back(
        paillier::Add(pub, blob_a.ciphertexts[i], blob_b.ciphertexts[i]));
  }
  return WrapBlowfishLayer(sum, a.chunk_size, kAbsentDigest, blowfish_key, rng);
}

Envelope EncryptDesRsa(ByteSpan plaintext, const rsa::PublicKey& pub,
                       RandomSource& rng) {
  if (pub.n <= BigInt(1) << 64) {
    throw KeyRangeError("RSA modulus must exceed 2^64 to wrap a DES key");
  }
  const Bytes session_key = rng.Generate(des::kKeySize);
  const des::Cipher cipher(session_key);

  Envelope env;
  env.layers = kDesRsaStack;
  env.iv = RandomIv(rng);
  env.wrapped_key =
      ToBytes(rsa::Encrypt(pub, FromBytes(session_key)), ByteLength(pub.n));
  env.digest = Sha256(plaintext);
  env.body = CbcEncrypt(cipher, env.iv, Pkcs7Pad(plaintext));
  return env;
}

Bytes DecryptDesRsa(const Envelope& env, const rsa::KeyPair& priv) {
  RequireStack(env, kDesRsaStack, "desrsa");
  if (env.wrapped_key.size() != ByteLength(priv.n)) {
    throw KeyMismatchError("wrapped key does not match the RSA modulus size");
  }
  const BigInt wrapped = FromBytes(env.wrapped_key);
  if (wrapped >= priv.n) {
    throw KeyMismatchError("wrapped key is not below the RSA modulus");
  }
  const BigInt session = rsa::Decrypt(priv, wrapped);
  if (ByteLength(session) > des::kKeySize) {
    throw KeyMismatchError("unwrapped session key is out of range");
  }
  const des::Cipher cipher(ToBytes(session, des::kKeySize));
  Bytes plaintext = Pkcs7Unpad(CbcDecrypt(cipher, env.iv, env.body));
  if (!env.has_digest() || Sha256(plaintext) != env.digest) {
    throw IntegrityError("plaintext digest mismatch");
  }
  return plaintext;
}

}  // namespace cryptvault
