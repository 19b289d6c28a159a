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

#include <bit>

#include "cryptvault/blowfish.h"
#include "cryptvault/errors.h"
#include "cryptvault/random.h"
#include "testkit/testkit.h"

namespace cryptvault::blowfish {
namespace {

using testkit::LoadVectors;
using testkit::VectorPath;

KeySchedule ZeroKey() { return ExpandKey(Bytes(8, 0)); }

TEST_CASE("zero key known answer") {
  const KeySchedule ks = ZeroKey();
  CHECK(EncryptBlock(ks, Block64::FromU64(0)).ToU64() == 0x4EF997456198DD78);
  CHECK(DecryptBlock(ks, Block64::FromU64(0x4EF997456198DD78)).ToU64() == 0);
}

TEST_CASE("ECB vector file") {
  const auto vectors = LoadVectors(VectorPath("blowfish_ecb.txt"));
  REQUIRE(vectors.size() == 34);
  for (const auto& v : vectors) {
    CAPTURE(ToHex(v.key));
    const KeySchedule ks = ExpandKey(v.key);
    const Block64 p = Block64::FromBytes(v.plaintext.data());
    const Block64 c = Block64::FromBytes(v.ciphertext.data());
    CHECK(EncryptBlock(ks, p) == c);
    CHECK(DecryptBlock(ks, c) == p);
    CHECK(testkit::OpenSslBlowfishEncrypt(v.key, p.ToU64()) == c.ToU64());
  }
}

TEST_CASE("variable key length vector file") {
  const auto vectors = LoadVectors(VectorPath("blowfish_keylen.txt"));
  REQUIRE(vectors.size() == 21);
  for (const auto& v : vectors) {
    CAPTURE(ToHex(v.key));
    const KeySchedule ks = ExpandKey(v.key);
    const Block64 p = Block64::FromBytes(v.plaintext.data());
    const Block64 c = Block64::FromBytes(v.ciphertext.data());
    CHECK(EncryptBlock(ks, p) == c);
    CHECK(DecryptBlock(ks, c) == p);
  }
}

TEST_CASE("all ones known answer") {
  const KeySchedule ks = ExpandKey(Bytes(8, 0xFF));
  CHECK(EncryptBlock(ks, Block64::FromU64(~0ull)).ToU64() == 0x51866FD5B85ECB8A);
}

TEST_CASE("key length bounds") {
  CHECK_THROWS_AS(ExpandKey(Bytes(3, 1)), KeyLengthError);
  CHECK_THROWS_AS(ExpandKey(Bytes(57, 1)), KeyLengthError);
  CHECK_THROWS_AS(ExpandKey({}), KeyLengthError);
  CHECK_NOTHROW(ExpandKey(Bytes(4, 1)));
  CHECK_NOTHROW(ExpandKey(Bytes(56, 1)));
}

TEST_CASE("key schedule is deterministic") {
  const KeySchedule a = ExpandKey(AsBytes("TESTKEY"));
  const KeySchedule b = ExpandKey(AsBytes("TESTKEY"));
  CHECK(a == b);
  CHECK_FALSE(a == ExpandKey(AsBytes("TESTKEZ")));
  CHECK(a.p_array().size() == 18);
  for (std::size_t i = 0; i < 4; ++i) CHECK(a.s_box(i).size() == 256);
  for (std::size_t i = 0; i < 18; ++i) {
    CHECK(a.p_array_reversed()[i] == a.p_array()[17 - i]);
  }
}

TEST_CASE("F function matches a direct table lookup") {
  const KeySchedule ks = ZeroKey();
  const auto s0 = ks.s_box(0).data();
  const auto s1 = ks.s_box(1).data();
  const auto s2 = ks.s_box(2).data();
  const auto s3 = ks.s_box(3).data();
  CHECK(FFunction(ks, 0) == testkit::ReferenceBlowfishF(s0, s1, s2, s3, 0));
  const std::uint32_t expect =
      ((ks.s_box(0)[1] + ks.s_box(1)[2]) ^ ks.s_box(2)[3]) + ks.s_box(3)[4];
  CHECK(FFunction(ks, 0x01020304) == expect);
  SeededRandom rng(5);
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t x = LoadBe32(rng.Generate(4).data());
    CHECK(FFunction(ks, x) == testkit::ReferenceBlowfishF(s0, s1, s2, s3, x));
    CHECK(FFunction(ks, x) == FFunction(ks, x));
  }
}

TEST_CASE("round trip and agreement with OpenSSL on random keys") {
  SeededRandom rng(6);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t len = 4 + rng.Generate(1)[0] % 53;
    const Bytes key = rng.Generate(len);
    const KeySchedule ks = ExpandKey(key);
    const Block64 p = Block64::FromBytes(rng.Generate(8).data());
    const Block64 c = EncryptBlock(ks, p);
    REQUIRE(DecryptBlock(ks, c) == p);
    if (i % 50 == 0) {
      CHECK(testkit::OpenSslBlowfishEncrypt(key, p.ToU64()) == c.ToU64());
    }
  }
}

TEST_CASE("block byte order") {
  const Bytes b = FromHex("0123456789abcdef");
  const Block64 x = Block64::FromBytes(b.data());
  CHECK(x.left == 0x01234567);
  CHECK(x.right == 0x89ABCDEF);
  std::uint8_t out[8];
  x.ToBytes(out);
  CHECK(Bytes(out, out + 8) == b);
  CHECK(Block64::FromU64(x.ToU64()) == x);
}

TEST_CASE("avalanche") {
  SeededRandom rng(7);
  const KeySchedule ks = ExpandKey(rng.Generate(16));
  long total = 0;
  constexpr int kTrials = 2000;
  for (int i = 0; i < kTrials; ++i) {
    const std::uint64_t p = LoadBe64(rng.Generate(8).data());
    const int bit = rng.Generate(1)[0] % 64;
    const std::uint64_t a = EncryptBlock(ks, Block64::FromU64(p)).ToU64();
    const std::uint64_t b =
        EncryptBlock(ks, Block64::FromU64(p ^ (1ull << bit))).ToU64();
    total += std::popcount(a ^ b);
  }
  const double mean = static_cast<double>(total) / kTrials;
  CHECK(mean >= 24.0);
  CHECK(mean <= 40.0);
}

TEST_CASE("multi-block ECB matches single blocks") {
  SeededRandom rng(8);
  const KeySchedule ks = ExpandKey(rng.Generate(20));
  const Bytes in = rng.Generate(8 * 37);
  Bytes out(in.size()), back(in.size());
  EncryptBlocks(ks, in, out);
  for (std::size_t off = 0; off < in.size(); off += 8) {
    const Block64 c = EncryptBlock(ks, Block64::FromBytes(in.data() + off));
    CHECK(c == Block64::FromBytes(out.data() + off));
  }
  DecryptBlocks(ks, out, back);
  CHECK(back == in);
  Bytes inplace = in;
  EncryptBlocks(ks, inplace, inplace);
  CHECK(inplace == out);
  Bytes bad(7);
  CHECK_THROWS_AS(EncryptBlocks(ks, bad, bad), BlockLengthError);
  Bytes small(8);
  CHECK_THROWS_AS(EncryptBlocks(ks, in, small), BlockLengthError);
}

}  // namespace
}  // namespace cryptvault::blowfish
