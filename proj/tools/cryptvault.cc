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

// cryptvault command-line tool. Exit status: 0 success, 1 runtime or
// cryptographic failure, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cryptvault/bench.h"
#include "cryptvault/envelope.h"
#include "cryptvault/errors.h"
#include "cryptvault/io.h"
#include "cryptvault/keyfile.h"
#include "cryptvault/random.h"
#include "cryptvault/vault.h"

namespace cv = cryptvault;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string seed_hex;
  bool overwrite = false;
  std::string vault_dir = "vault";

  std::unique_ptr<cv::RandomSource> Rng() const {
    if (seed_hex.empty()) return std::make_unique<cv::SystemRandom>();
    cv::Bytes seed;
    try {
      seed = cv::FromHex(seed_hex);
    } catch (const cv::ParseError& e) {
      throw UsageError(std::string("--seed: ") + e.what());
    }
    if (seed.empty()) throw UsageError("--seed must not be empty");
    return std::make_unique<cv::SeededRandom>(seed);
  }

  // Seeded runs must not depend on the wall clock either.
  cv::vault::Vault::Clock Clock() const {
    if (seed_hex.empty()) return nullptr;
    std::int64_t fixed = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
      fixed = std::strtoll(epoch, nullptr, 10);
    }
    return [fixed] { return fixed; };
  }

  cv::vault::Vault OpenVault(bool create) const {
    return cv::vault::Vault(vault_dir, create, Clock());
  }
};

std::string ReadText(const std::string& path) { return cv::io::ReadTextFile(path); }

void WriteText(const fs::path& path, const std::string& text) {
  cv::io::WriteFileAtomic(path, cv::AsBytes(text));
}

bool HasHeader(const std::string& text, std::string_view header) {
  return text.rfind(std::string(header) + "\n", 0) == 0 ||
         text.rfind(std::string(header) + "\r\n", 0) == 0;
}

// Public-key slots also accept the matching private key file.
cv::paillier::PublicKey LoadPaillierPublic(const std::string& path) {
  const std::string text = ReadText(path);
  if (HasHeader(text, "paillier-private v1")) {
    return cv::keyfile::ParsePaillierPrivate(text).pub;
  }
  return cv::keyfile::ParsePaillierPublic(text);
}

cv::rsa::PublicKey LoadRsaPublic(const std::string& path) {
  const std::string text = ReadText(path);
  if (HasHeader(text, "rsa-private v1")) {
    return cv::keyfile::ParseRsaPrivate(text).Public();
  }
  return cv::keyfile::ParseRsaPublic(text);
}

void Require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

// ---- keygen ---------------------------------------------------------------

struct KeygenArgs {
  std::string scheme;
  std::size_t size = 0;
  std::string out;
};

void CheckAsymmetricBits(std::size_t bits) {
  if (bits < 16 || bits % 2 != 0) {
    throw UsageError("modulus size must be an even number of bits >= 16, got " +
                     std::to_string(bits));
  }
}

int Keygen(const Globals& g, const KeygenArgs& a) {
  auto rng = g.Rng();
  std::string fingerprint;
  if (a.scheme == "blowfish") {
    if (a.size < 4 || a.size > 56) {
      throw UsageError("Blowfish keys are 4..56 bytes, got " + std::to_string(a.size));
    }
    const cv::Bytes key = rng->Generate(a.size);
    WriteText(a.out, cv::keyfile::FormatBlowfishKey(key));
    fingerprint = cv::keyfile::Fingerprint(std::string(key.begin(), key.end()));
    std::cout << "wrote " << a.out << "\n";
  } else if (a.scheme == "des") {
    if (a.size != 8 && a.size != 64) {
      throw UsageError("DES keys are 8 bytes (64 bits), got " + std::to_string(a.size));
    }
    const cv::Bytes key = rng->Generate(8);
    WriteText(a.out, cv::keyfile::FormatDesKey(key));
    fingerprint = cv::keyfile::Fingerprint(std::string(key.begin(), key.end()));
    std::cout << "wrote " << a.out << "\n";
  } else if (a.scheme == "rsa") {
    CheckAsymmetricBits(a.size);
    const cv::rsa::KeyPair key = cv::rsa::Generate(a.size, *rng);
    const std::string pub = cv::keyfile::FormatRsaPublic(key.Public());
    WriteText(a.out + ".pub", pub);
    WriteText(a.out + ".key", cv::keyfile::FormatRsaPrivate(key));
    fingerprint = cv::keyfile::Fingerprint(pub);
    std::cout << "wrote " << a.out << ".pub " << a.out << ".key\n";
  } else if (a.scheme == "paillier") {
    CheckAsymmetricBits(a.size);
    const cv::paillier::PrivateKey key = cv::paillier::Generate(a.size, *rng);
    const std::string pub = cv::keyfile::FormatPaillierPublic(key.pub);
    WriteText(a.out + ".pub", pub);
    WriteText(a.out + ".key", cv::keyfile::FormatPaillierPrivate(key));
    fingerprint = cv::keyfile::Fingerprint(pub);
    std::cout << "wrote " << a.out << ".pub " << a.out << ".key\n";
  } else {
    throw UsageError("unknown scheme '" + a.scheme + "'");
  }
  std::cout << "fingerprint " << fingerprint << "\n";
  return 0;
}

// ---- encrypt / decrypt ----------------------------------------------------

struct CryptArgs {
  std::string pipeline;
  std::string in;
  std::string out;
  std::string paillier;
  std::string blowfish;
  std::string rsa;
  bool integers = false;
};

int Encrypt(const Globals& g, const CryptArgs& a) {
  auto rng = g.Rng();
  const cv::Bytes plaintext = cv::io::ReadFile(a.in);
  cv::Envelope env;
  if (a.pipeline == "multilevel") {
    Require(a.paillier, "--paillier");
    Require(a.blowfish, "--blowfish");
    env = cv::EncryptMultilevel(
        plaintext, LoadPaillierPublic(a.paillier),
        cv::keyfile::ParseBlowfishKey(ReadText(a.blowfish)), *rng);
  } else if (a.pipeline == "desrsa") {
    Require(a.rsa, "--rsa");
    env = cv::EncryptDesRsa(plaintext, LoadRsaPublic(a.rsa), *rng);
  } else {
    throw UsageError("unknown pipeline '" + a.pipeline + "'");
  }
  cv::io::WriteFileAtomic(a.out, cv::Serialize(env));
  return 0;
}

int Decrypt(const Globals&, const CryptArgs& a) {
  const cv::Envelope env = cv::Parse(cv::io::ReadFile(a.in));
  if (a.pipeline == "multilevel") {
    Require(a.paillier, "--paillier");
    Require(a.blowfish, "--blowfish");
    const auto priv = cv::keyfile::ParsePaillierPrivate(ReadText(a.paillier));
    const cv::Bytes bf = cv::keyfile::ParseBlowfishKey(ReadText(a.blowfish));
    if (a.integers) {
      std::string text;
      for (const cv::BigInt& v : cv::DecryptMultilevelIntegers(env, priv, bf)) {
        text += v.get_str(10);
        text += '\n';
      }
      WriteText(a.out, text);
      return 0;
    }
    const cv::MultilevelPlaintext result = cv::DecryptMultilevel(env, priv, bf);
    if (!result.integrity_checked) {
      std::cerr << "warning: envelope has no plaintext digest (homomorphic "
                   "result); integrity not checked\n";
    }
    cv::io::WriteFileAtomic(a.out, result.data);
  } else if (a.pipeline == "desrsa") {
    Require(a.rsa, "--rsa");
    if (a.integers) throw UsageError("--integers applies to multilevel only");
    const auto priv = cv::keyfile::ParseRsaPrivate(ReadText(a.rsa));
    cv::io::WriteFileAtomic(a.out, cv::DecryptDesRsa(env, priv));
  } else {
    throw UsageError("unknown pipeline '" + a.pipeline + "'");
  }
  return 0;
}

// ---- vault ----------------------------------------------------------------

struct VaultArgs {
  std::string name;
  std::string file;
  std::string name_b;
  std::string name_out;
  std::string paillier;
  std::string blowfish;
};

void PrintEntry(const cv::vault::Entry& e) {
  std::cout << e.name << '\t' << cv::FormatStack(e.layers) << '\t'
            << e.size_bytes << '\t' << e.created_at << '\n';
}

int Put(const Globals& g, const VaultArgs& a) {
  const cv::Envelope env = cv::Parse(cv::io::ReadFile(a.file));
  cv::vault::Vault v = g.OpenVault(true);
  PrintEntry(v.Put(a.name, env, g.overwrite));
  return 0;
}

int Get(const Globals& g, const VaultArgs& a) {
  const cv::vault::Vault v = g.OpenVault(false);
  cv::io::WriteFileAtomic(a.file, cv::Serialize(v.Get(a.name)));
  return 0;
}

int List(const Globals& g) {
  const cv::vault::Vault v = g.OpenVault(false);
  for (const auto& e : v.List()) PrintEntry(e);
  return 0;
}

int Hadd(const Globals& g, const VaultArgs& a) {
  Require(a.paillier, "--paillier");
  Require(a.blowfish, "--blowfish");
  auto rng = g.Rng();
  cv::vault::Vault v = g.OpenVault(false);
  PrintEntry(v.HomomorphicAdd(a.name, a.name_b, a.name_out,
                              cv::keyfile::ParseBlowfishKey(ReadText(a.blowfish)),
                              LoadPaillierPublic(a.paillier), *rng, g.overwrite));
  return 0;
}

int Fsck(const Globals& g) {
  const cv::vault::Vault v = g.OpenVault(false);
  const auto problems = v.Fsck();
  for (const auto& p : problems) std::cout << p << '\n';
  if (!problems.empty()) {
    std::cerr << "error (fsck): " << problems.size() << " problem(s)\n";
    return kExitFailure;
  }
  std::cout << "ok\n";
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::size_t> sizes = {1 << 20};
  int iterations = 3;
  std::size_t paillier_bits = 512;
  std::size_t rsa_bits = 1024;
  std::string out;
};

int Bench(const Globals& g, const BenchArgs& a) {
  for (std::size_t s : a.sizes) {
    if (s < 8) throw UsageError("--sizes entries must be >= 8 bytes");
  }
  if (a.iterations < 1) throw UsageError("--iterations must be >= 1");
  CheckAsymmetricBits(a.paillier_bits);
  CheckAsymmetricBits(a.rsa_bits);
  cv::bench::Options opt;
  opt.sizes = a.sizes;
  opt.iterations = a.iterations;
  opt.paillier_bits = a.paillier_bits;
  opt.rsa_bits = a.rsa_bits;
  auto rng = g.Rng();
  const auto rows = cv::bench::Run(opt, *rng);
  const std::string report = cv::bench::FormatReport(rows);
  std::cout << report;
  if (!a.out.empty()) WriteText(a.out, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cryptvault: layered encryption and an encrypted blob vault"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed_hex,
                 "Deterministic randomness from a hex seed (testing only, insecure)");
  app.add_flag("--overwrite", g.overwrite, "Replace existing files or vault entries");
  app.add_option("--vault", g.vault_dir, "Vault directory")->capture_default_str();

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a key");
  keygen->add_option("scheme", kg.scheme, "blowfish | des | rsa | paillier")
      ->required()
      ->check(CLI::IsMember({"blowfish", "des", "rsa", "paillier"}));
  keygen->add_option("size", kg.size, "Key bytes (blowfish, des) or modulus bits")
      ->required();
  keygen->add_option("out", kg.out,
                     "Output file; rsa and paillier write <out>.pub and <out>.key")
      ->required();

  CryptArgs ca;
  auto add_crypt = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("pipeline", ca.pipeline, "multilevel | desrsa")
        ->required()
        ->check(CLI::IsMember({"multilevel", "desrsa"}));
    sub->add_option("in", ca.in, "Input file")->required();
    sub->add_option("out", ca.out, "Output file")->required();
    sub->add_option("--paillier", ca.paillier, "Paillier key file");
    sub->add_option("--blowfish", ca.blowfish, "Blowfish key file");
    sub->add_option("--rsa", ca.rsa, "RSA key file");
    return sub;
  };
  auto* encrypt = add_crypt("encrypt", "Encrypt a file into an envelope");
  auto* decrypt = add_crypt("decrypt", "Decrypt an envelope");
  decrypt->add_flag("--integers", ca.integers,
                    "Write decrypted chunk values, one decimal per line");

  VaultArgs va;
  auto* put = app.add_subcommand("put", "Store an envelope file in the vault");
  put->add_option("name", va.name)->required();
  put->add_option("file", va.file)->required();
  auto* get = app.add_subcommand("get", "Copy a vault entry to a file");
  get->add_option("name", va.name)->required();
  get->add_option("out", va.file)->required();
  auto* list = app.add_subcommand("list", "List vault entries");
  auto* hadd = app.add_subcommand(
      "hadd", "Add two multilevel entries without the Paillier private key");
  hadd->add_option("a", va.name)->required();
  hadd->add_option("b", va.name_b)->required();
  hadd->add_option("out", va.name_out)->required();
  hadd->add_option("--paillier", va.paillier, "Paillier public key file");
  hadd->add_option("--blowfish", va.blowfish, "Blowfish key file");
  auto* fsck = app.add_subcommand("fsck", "Check index and blob consistency");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Throughput table (tab separated)");
  bench->add_option("--sizes", ba.sizes, "Buffer sizes in bytes")->delimiter(',');
  bench->add_option("--iterations", ba.iterations, "Timed runs per row");
  bench->add_option("--paillier-bits", ba.paillier_bits, "Paillier modulus size for multilevel rows");
  bench->add_option("--rsa-bits", ba.rsa_bits, "RSA modulus size for desrsa rows");
  bench->add_option("--out", ba.out, "Also write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*keygen) return Keygen(g, kg);
    if (*encrypt) return Encrypt(g, ca);
    if (*decrypt) return Decrypt(g, ca);
    if (*put) return Put(g, va);
    if (*get) return Get(g, va);
    if (*list) return List(g);
    if (*hadd) return Hadd(g, va);
    if (*fsck) return Fsck(g);
    if (*bench) return Bench(g, ba);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const cv::Error& e) {
    std::cerr << "error (" << cv::ErrorCategory(e.code()) << "): " << e.what()
              << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
