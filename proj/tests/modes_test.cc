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

#include "doctest.h"

#include "cryptvault/blowfish.h"
#include "cryptvault/des.h"
#include "cryptvault/errors.h"
#include "cryptvault/modes.h"
#include "cryptvault/random.h"

namespace cryptvault {
namespace {

TEST_CASE("pkcs7 pad") {
  CHECK(Pkcs7Pad({}) == Bytes(8, 0x08));
  const Bytes seven(7, 0xaa);
  const Bytes p = Pkcs7Pad(seven);
  REQUIRE(p.size() == 8);
  CHECK(p.back() == 0x01);
  CHECK(Pkcs7Pad(Bytes(8, 1)).size() == 16);
  CHECK(Pkcs7Pad(Bytes(8, 1)).back() == 0x08);
}

TEST_CASE("pkcs7 unpad") {
  SeededRandom rng(50);
  for (std::size_t len = 0; len < 40; ++len) {
    const Bytes data = rng.Generate(len);
    CHECK(Pkcs7Unpad(Pkcs7Pad(data)) == data);
  }
  Bytes bad(8, 0);
  bad.back() = 0x09;
  CHECK_THROWS_AS(Pkcs7Unpad(bad), PaddingError);
  bad.back() = 0x00;
  CHECK_THROWS_AS(Pkcs7Unpad(bad), PaddingError);
  Bytes mixed = {1, 2, 3, 4, 5, 3, 2, 3};
  CHECK_THROWS_AS(Pkcs7Unpad(mixed), PaddingError);
  CHECK_THROWS_AS(Pkcs7Unpad({}), PaddingError);
  CHECK_THROWS_AS(Pkcs7Unpad(Bytes(7, 1)), PaddingError);
}

TEST_CASE("cipher handles satisfy the concept") {
  static_assert(BlockCipher<blowfish::Cipher>);
  static_assert(BlockCipher<des::Cipher>);
}

TEST_CASE("blowfish CBC known answer") {
  const blowfish::Cipher c(FromHex("0123456789abcdeff0e1d2c3b4a59687"));
  const Bytes iv = FromHex("fedcba9876543210");
  const std::string_view text = "7654321 Now is the time for ";
  Bytes data(text.begin(), text.end());
  data.push_back(0);
  data.resize(32, 0);
  const Bytes out = CbcEncrypt(c, iv, data);
  CHECK(ToHex(out) ==
        "6b77b4d63006dee605b156e27403979358deb9e7154616d959f1652bd5ff92cc");
  CHECK(CbcDecrypt(c, iv, out) == data);
}

template <typename C>
void CheckCbc(const C& cipher, RandomSource& rng) {
  const Bytes iv = rng.Generate(8);
  const Bytes block = rng.Generate(8);
  Bytes x(8), ecb(8);
  for (int i = 0; i < 8; ++i) x[i] = block[i] ^ iv[i];
  cipher.EncryptBlock(x.data(), ecb.data());
  CHECK(CbcEncrypt(cipher, iv, block) == ecb);

  for (std::size_t blocks : {0u, 1u, 2u, 9u, 100u}) {
    const Bytes data = rng.Generate(8 * blocks);
    CHECK(CbcDecrypt(cipher, iv, CbcEncrypt(cipher, iv, data)) == data);
  }
  const Bytes data = rng.Generate(64);
  const Bytes iv2 = rng.Generate(8);
  CHECK(CbcEncrypt(cipher, iv, data) != CbcEncrypt(cipher, iv2, data));
  CHECK_THROWS_AS(CbcEncrypt(cipher, iv, Bytes(9)), BlockLengthError);
  CHECK_THROWS_AS(CbcDecrypt(cipher, Bytes(7), Bytes(8)), BlockLengthError);
}

TEST_CASE("CBC properties") {
  SeededRandom rng(51);
  CheckCbc(blowfish::Cipher(rng.Generate(16)), rng);
  CheckCbc(des::Cipher(rng.Generate(8)), rng);
}

}  // namespace
}  // namespace cryptvault
