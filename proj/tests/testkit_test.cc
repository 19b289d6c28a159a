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

#include <filesystem>
#include <fstream>

#include "cryptvault/errors.h"
#include "testkit/testkit.h"

namespace cryptvault::testkit {
namespace {

TEST_CASE("oracle modexp small cases") {
  CHECK(OracleModexp(17, 7, 33) == 8);
  BigInt acc = 1;
  for (int i = 0; i < 7; ++i) acc = acc * 17 % 33;
  CHECK(acc == 8);
  for (int x = 0; x < 50; ++x) {
    CHECK(OracleModexp(x, 1, 33) == x % 33);
    CHECK(OracleModexp(x, 0, 33) == 1);
  }
  CHECK(OracleModexp(5, 0, 1) == 0);
}

TEST_CASE("oracle modexp rejects zero modulus") {
  CHECK_THROWS_AS(OracleModexp(3, 4, 0), ZeroModulusError);
}

TEST_CASE("units of toy moduli") {
  CHECK(Units(15) == std::vector<std::uint64_t>{1, 2, 4, 7, 8, 11, 13, 14});
  CHECK(Units(33).size() == 20);
}

TEST_CASE("paillier formulas on n = 15") {
  // lambda = lcm(2, 4) = 4, mu = L(16^4 mod 225)^-1 mod 15 = 4.
  CHECK(PaillierFormulaEncrypt(15, 1, 2) == 38);
  CHECK(PaillierFormulaDecrypt(15, 4, 4, 38) == 1);
}

TEST_CASE("parse vectors") {
  const auto v = ParseVectors("# comment\n\n00ff 0102 a0b0\n  \nAABB 00 11\n");
  REQUIRE(v.size() == 2);
  CHECK(v[0].key == Bytes{0x00, 0xff});
  CHECK(v[1].key == Bytes{0xaa, 0xbb});
  CHECK(v[1].ciphertext == Bytes{0x11});
  CHECK(ParseVectors("").empty());
}

TEST_CASE("parse vectors reports the line") {
  try {
    ParseVectors("00 11 22\n# x\n001 11 22\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseVectors("00 11\n"), ParseError);
  CHECK_THROWS_AS(ParseVectors("00 11 22 33\n"), ParseError);
  CHECK_THROWS_AS(ParseVectors("zz 11 22\n"), ParseError);
}

TEST_CASE("load vectors from disk") {
  const auto path = std::filesystem::temp_directory_path() / "cv_empty_vectors.txt";
  { std::ofstream out(path); }
  CHECK(LoadVectors(path).empty());
  std::filesystem::remove(path);
  CHECK(LoadVectors(VectorPath("blowfish_ecb.txt")).size() >= 34);
  CHECK_THROWS_AS(LoadVectors("/nonexistent/vectors.txt"), IoError);
}

TEST_CASE("reference DES worked example") {
  const auto ks = ReferenceDesSubkeys(0x133457799BBCDFF1);
  CHECK(ks[0] == 0x1B02EFFC7072);
  CHECK(ks[15] == 0xCB3D8B0E17F5);
  CHECK(ReferenceDesEncrypt(0x133457799BBCDFF1, 0x0123456789ABCDEF) ==
        0x85E813540F0AB405);
  CHECK(ReferenceDesDecrypt(0x133457799BBCDFF1, 0x85E813540F0AB405) ==
        0x0123456789ABCDEF);
}

TEST_CASE("reference DES agrees with OpenSSL") {
  std::uint64_t x = 0x9E3779B97F4A7C15;
  for (int i = 0; i < 200; ++i) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    const std::uint64_t key = x;
    const std::uint64_t block = x * 0xBF58476D1CE4E5B9;
    CHECK(ReferenceDesEncrypt(key, block) == OpenSslDesEncrypt(key, block));
  }
}

TEST_CASE("openssl blowfish reproduces a known answer") {
  const Bytes key(8, 0);
  CHECK(OpenSslBlowfishEncrypt(key, 0) == 0x4EF997456198DD78);
}

}  // namespace
}  // namespace cryptvault::testkit
