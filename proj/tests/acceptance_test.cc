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


// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Time limits are wall-clock seconds.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <unistd.h>

#include "cryptvault/bench.h"
#include "cryptvault/bigint.h"
#include "cryptvault/blowfish.h"
#include "cryptvault/des.h"
#include "cryptvault/envelope.h"
#include "cryptvault/errors.h"
#include "cryptvault/io.h"
#include "cryptvault/paillier.h"
#include "cryptvault/random.h"
#include "cryptvault/rsa.h"
#include "cryptvault/sha256.h"
#include "cryptvault/vault.h"
#include "testkit/testkit.h"

#ifndef CRYPTVAULT_REPORT_DIR
#define CRYPTVAULT_REPORT_DIR "."
#endif

namespace cryptvault {
namespace {

namespace fs = std::filesystem;

constexpr double kBlowfishVectorsSeconds = 1;
constexpr double kDesExampleSeconds = 1;
constexpr double kRsaSeconds = 30;
constexpr double kPaillierSeconds = 30;
constexpr double kMultilevelSeconds = 120;
constexpr double kDesRsaSeconds = 60;
constexpr double kVaultAddSeconds = 5;
constexpr double kBenchSeconds = 60;

constexpr int kHomomorphicPairs = 200;
constexpr std::size_t kLargeModulusBits = 512;
constexpr int kPipelineInputs = 100;
constexpr std::size_t kMaxInputBytes = 1 << 20;
constexpr std::size_t kMultilevelPaillierBits = 256;
constexpr std::size_t kDesRsaBits = 1024;
constexpr int kCorruptions = 50;

// A check that failed; the message says which.
struct Failure {
  std::string what;
};

void Expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = fs::temp_directory_path() /
            ("cv_accept_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::uint64_t Word(RandomSource& rng) { return LoadBe64(rng.Generate(8).data()); }

std::size_t Below(std::size_t bound, RandomSource& rng) {
  return static_cast<std::size_t>(Word(rng) % bound);
}

void BlowfishVectors() {
  int count = 0;
  for (const char* file : {"blowfish_ecb.txt", "blowfish_keylen.txt"}) {
    for (const auto& v : testkit::LoadVectors(testkit::VectorPath(file))) {
      const auto ks = blowfish::ExpandKey(v.key);
      const auto p = blowfish::Block64::FromBytes(v.plaintext.data());
      const auto c = blowfish::Block64::FromBytes(v.ciphertext.data());
      Expect(blowfish::EncryptBlock(ks, p) == c,
             std::string(file) + " encrypt key " + ToHex(v.key));
      Expect(blowfish::DecryptBlock(ks, c) == p,
             std::string(file) + " decrypt key " + ToHex(v.key));
      ++count;
    }
  }
  Expect(count == 55, "expected 55 vectors, found " + std::to_string(count));
}

void DesExample() {
  const auto ks = des::ExpandKey(FromHex("133457799bbcdff1"));
  const des::Block c = des::EncryptBlock(ks, FromHex("0123456789abcdef"));
  Expect(ToHex(c) == "85e813540f0ab405", "encrypt gave " + ToHex(c));
  const des::Block p = des::DecryptBlock(ks, c);
  Expect(ToHex(p) == "0123456789abcdef", "decrypt gave " + ToHex(p));
  for (const auto& v : testkit::LoadVectors(testkit::VectorPath("des_kat.txt"))) {
    const auto k = des::ExpandKey(v.key);
    const des::Block got = des::EncryptBlock(k, v.plaintext);
    Expect(Bytes(got.begin(), got.end()) == v.ciphertext,
           "known answer for key " + ToHex(v.key));
  }
}

void RsaMultiplicative() {
  const rsa::KeyPair toy = rsa::FromPrimes(3, 11, 3);
  for (unsigned long a = 0; a < 33; ++a) {
    for (unsigned long b = 0; b < 33; ++b) {
      const BigInt c = rsa::HomomorphicMultiply(
          toy.Public(), rsa::Encrypt(toy.Public(), a), rsa::Encrypt(toy.Public(), b));
      Expect(rsa::Decrypt(toy, c) == BigInt(a * b % 33),
             "n=33 pair " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  SeededRandom rng(0xacc3);
  const rsa::KeyPair key = rsa::Generate(kLargeModulusBits, rng);
  for (int i = 0; i < kHomomorphicPairs; ++i) {
    const BigInt a = RandomBelow(key.n, rng);
    const BigInt b = RandomBelow(key.n, rng);
    const BigInt c = rsa::HomomorphicMultiply(
        key.Public(), rsa::Encrypt(key.Public(), a), rsa::Encrypt(key.Public(), b));
    Expect(rsa::Decrypt(key, c) == BigInt((a * b) % key.n),
           "512-bit pair " + std::to_string(i));
  }
}

void PaillierAdditive() {
  const paillier::PrivateKey toy = paillier::FromPrimes(3, 5);
  const auto units = testkit::Units(15);
  for (unsigned long a = 0; a < 15; ++a) {
    for (unsigned long b = 0; b < 15; ++b) {
      const BigInt r1(static_cast<unsigned long>(units[(a + b) % units.size()]));
      const BigInt r2(static_cast<unsigned long>(units[(a * b) % units.size()]));
      const BigInt c = paillier::Add(toy.pub, paillier::Encrypt(toy.pub, a, r1),
                                     paillier::Encrypt(toy.pub, b, r2));
      Expect(paillier::Decrypt(toy, c) == BigInt((a + b) % 15),
             "n=15 pair " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  SeededRandom rng(0xacc4);
  const paillier::PrivateKey key = paillier::Generate(kLargeModulusBits, rng);
  const BigInt& n = key.pub.n();
  for (int i = 0; i < kHomomorphicPairs; ++i) {
    const BigInt a = RandomBelow(n, rng);
    const BigInt b = RandomBelow(n, rng);
    const BigInt c = paillier::Add(key.pub, paillier::Encrypt(key.pub, a, rng),
                                   paillier::Encrypt(key.pub, b, rng));
    Expect(paillier::Decrypt(key, c) == BigInt((a + b) % n),
           "512-bit pair " + std::to_string(i));
  }
}

// Input lengths: the two extremes, then uniform over [0, max].
std::vector<std::size_t> InputLengths(RandomSource& rng) {
  std::vector<std::size_t> lengths = {0, kMaxInputBytes};
  while (lengths.size() < kPipelineInputs) {
    lengths.push_back(Below(kMaxInputBytes + 1, rng));
  }
  return lengths;
}

void MultilevelRoundTrips() {
  SeededRandom rng(0xacc5);
  const paillier::PrivateKey key = paillier::Generate(kMultilevelPaillierBits, rng);
  const Bytes bf_key = rng.Generate(16);
  for (std::size_t len : InputLengths(rng)) {
    const Bytes m = rng.Generate(len);
    const Envelope env = EncryptMultilevel(m, key.pub, bf_key, rng);
    Expect(env.digest == Sha256(m), "digest for length " + std::to_string(len));
    const Envelope back = Parse(Serialize(env));
    const MultilevelPlaintext out = DecryptMultilevel(back, key, bf_key);
    Expect(out.integrity_checked, "digest unchecked, length " + std::to_string(len));
    Expect(out.data == m, "mismatch at length " + std::to_string(len));
  }
}

void DesRsaRoundTrips() {
  SeededRandom rng(0xacc6);
  const rsa::KeyPair key = rsa::Generate(kDesRsaBits, rng);
  for (std::size_t len : InputLengths(rng)) {
    const Bytes m = rng.Generate(len);
    const Envelope env = Parse(Serialize(EncryptDesRsa(m, key.Public(), rng)));
    Expect(DecryptDesRsa(env, key) == m, "mismatch at length " + std::to_string(len));
  }
}

struct VaultKeys {
  paillier::PrivateKey paillier;
  rsa::KeyPair rsa;
  Bytes blowfish;
};

const VaultKeys& Keys() {
  static const VaultKeys keys = [] {
    SeededRandom rng(0xacc7);
    return VaultKeys{paillier::Generate(kLargeModulusBits, rng),
                     rsa::Generate(kLargeModulusBits, rng), rng.Generate(16)};
  }();
  return keys;
}

vault::Vault::Clock FixedClock() {
  return [] { return std::int64_t{1700000000}; };
}

void VaultAddition() {
  const VaultKeys& k = Keys();
  TempDir dir("add");
  vault::Vault v(dir.path(), true, FixedClock());
  SeededRandom rng(0xacc8);
  auto put = [&](const char* name, Bytes m) {
    v.Put(name, EncryptMultilevel(m, k.paillier.pub, k.blowfish, rng));
  };
  put("five", Bytes{5});
  put("seven", Bytes{7});
  put("zero", Bytes{0});
  v.HomomorphicAdd("five", "seven", "sum", k.blowfish, k.paillier.pub, rng);
  const MultilevelPlaintext sum = DecryptMultilevel(v.Get("sum"), k.paillier, k.blowfish);
  Expect(sum.data == Bytes{12}, "5 + 7 gave " + ToHex(sum.data));
  Expect(!sum.integrity_checked, "sum carries a digest");

  const Bytes x = rng.Generate(1);
  put("x", x);
  v.HomomorphicAdd("x", "zero", "x_plus_zero", k.blowfish, k.paillier.pub, rng);
  Expect(DecryptMultilevelIntegers(v.Get("x_plus_zero"), k.paillier, k.blowfish) ==
             DecryptMultilevelIntegers(v.Get("x"), k.paillier, k.blowfish),
         "x + E(0) differs from x");
  Expect(v.Get("x_plus_zero").body != v.Get("x").body, "x + E(0) reused x's bytes");
  Expect(v.Fsck().empty(), "fsck reported problems");
}

// Each trial corrupts one byte of a stored blob; reading and decrypting it
// must end in a cryptvault::Error.
void CorruptionDetection() {
  const VaultKeys& k = Keys();
  TempDir dir("corrupt");
  vault::Vault v(dir.path(), true, FixedClock());
  SeededRandom rng(0xacc9);
  const Bytes m = rng.Generate(300);
  v.Put("ml", EncryptMultilevel(m, k.paillier.pub, k.blowfish, rng));
  v.Put("dr", EncryptDesRsa(m, k.rsa.Public(), rng));
  for (int i = 0; i < kCorruptions; ++i) {
    const char* name = i % 2 == 0 ? "ml" : "dr";
    const fs::path blob = dir.path() / "blobs" / vault::BlobFileName(name);
    const Bytes original = io::ReadFile(blob);
    Bytes bad = original;
    const std::size_t pos = Below(bad.size(), rng);
    bad[pos] ^= static_cast<std::uint8_t>(1 + Below(255, rng));
    io::WriteFileAtomic(blob, bad);
    bool classified = false;
    try {
      const Envelope env = v.Get(name);
      if (i % 2 == 0) {
        DecryptMultilevel(env, k.paillier, k.blowfish);
      } else {
        DecryptDesRsa(env, k.rsa);
      }
    } catch (const Error&) {
      classified = true;
    }
    io::WriteFileAtomic(blob, original);
    Expect(classified, std::string(name) + " byte " + std::to_string(pos) +
                           " corrupted without a classified error");
  }
}

void BenchReport() {
  SeededRandom rng(0xacca);
  bench::Options options;
  options.sizes = {kMaxInputBytes};
  options.iterations = 3;
  options.paillier_bits = kMultilevelPaillierBits;
  const auto rows = bench::Run(options, rng);
  const fs::path report = fs::path(CRYPTVAULT_REPORT_DIR) / "bench_report.tsv";
  io::WriteFileAtomic(report, AsBytes(bench::FormatReport(rows)));
  const auto archived = bench::ParseTable(io::ReadTextFile(report));
  Expect(archived.size() == rows.size(), "archived report does not parse back");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Expect(archived[i].algorithm == rows[i].algorithm &&
               archived[i].bytes == rows[i].bytes,
           "archived row " + std::to_string(i) + " differs");
  }
  double bf = 0;
  double ds = 0;
  for (const auto& row : rows) {
    if (row.bytes != kMaxInputBytes) continue;
    if (row.algorithm == "blowfish-cbc") bf = row.mbps_mean;
    if (row.algorithm == "des-cbc") ds = row.mbps_mean;
  }
  Expect(bf > 0 && ds > 0, "missing blowfish-cbc or des-cbc row");
  std::printf("      blowfish-cbc %.1f MB/s, des-cbc %.1f MB/s, report %s\n", bf,
              ds, report.c_str());
  Expect(bf > ds, "blowfish-cbc is not faster than des-cbc");
}

void InterruptedWrite() {
  const VaultKeys& k = Keys();
  TempDir dir("crash");
  SeededRandom rng(0xaccb);
  const Envelope kept = EncryptMultilevel(AsBytes("kept"), k.paillier.pub, k.blowfish, rng);
  {
    vault::Vault v(dir.path(), true, FixedClock());
    v.Put("kept", kept);
  }
  const Bytes partial = Serialize(
      EncryptMultilevel(AsBytes("lost"), k.paillier.pub, k.blowfish, rng));
  {
    std::ofstream blob(dir.path() / "blobs" / (vault::BlobFileName("lost") + ".tmp"),
                       std::ios::binary);
    blob.write(reinterpret_cast<const char*>(partial.data()),
               static_cast<std::streamsize>(partial.size() / 2));
    std::ofstream(dir.path() / "index.tsv.tmp") << "# cryptvault-index\tv1\nlost\t";
  }
  const vault::Vault after(dir.path(), false);
  const auto entries = after.List();
  Expect(entries.size() == 1 && entries[0].name == "kept", "index changed");
  Expect(after.Get("kept") == kept, "kept entry changed");
  Expect(after.Fsck().empty(), "fsck reported problems");
  bool missing = false;
  try {
    after.Get("lost");
  } catch (const NotFoundError&) {
    missing = true;
  }
  Expect(missing, "half-written entry is visible");
  vault::Vault writer(dir.path(), true, FixedClock());
  writer.Put("lost", EncryptMultilevel(AsBytes("lost"), k.paillier.pub, k.blowfish, rng));
  Expect(writer.List().size() == 2, "vault not writable after recovery");
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<void()> run;
};

}  // namespace
}  // namespace cryptvault

int main() {
  using namespace cryptvault;
  const std::vector<Criterion> criteria = {
      {"blowfish-vectors", kBlowfishVectorsSeconds, BlowfishVectors},
      {"des-example", kDesExampleSeconds, DesExample},
      {"rsa-multiplicative", kRsaSeconds, RsaMultiplicative},
      {"paillier-additive", kPaillierSeconds, PaillierAdditive},
      {"multilevel-roundtrip", kMultilevelSeconds, MultilevelRoundTrips},
      {"desrsa-roundtrip", kDesRsaSeconds, DesRsaRoundTrips},
      {"vault-hadd", kVaultAddSeconds, VaultAddition},
      {"corruption-detected", 0, CorruptionDetection},
      {"bench-blowfish-faster", kBenchSeconds, BenchReport},
      {"crash-safety", 0, InterruptedWrite},
  };
  // Key generation shared by later criteria is not charged to any of them.
  Keys();
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && elapsed >= c.limit_seconds) {
      ok = false;
      detail = "over the " + std::to_string(c.limit_seconds) + " s limit";
    }
    std::printf("%s %-22s %8.2fs%s%s\n", ok ? "PASS" : "FAIL", c.name, elapsed,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
