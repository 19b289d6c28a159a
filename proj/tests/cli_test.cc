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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cryptvault/bytes.h"
#include "cryptvault/io.h"
#include "cryptvault/keyfile.h"
#include "cryptvault/random.h"

namespace cryptvault {
namespace {

namespace fs = std::filesystem;

struct Result {
  int rc = -1;
  std::string out;
  std::string err;
};

class Sandbox {
 public:
  Sandbox() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() / ("cv_cli_test_" + std::to_string(::getpid()) +
                                        "_" + std::to_string(counter++));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Sandbox() { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  Result Run(const std::string& args) const {
    const std::string cmd = "cd '" + dir_.string() + "' && '" CRYPTVAULT_CLI_PATH "' " +
                            args + " >stdout.txt 2>stderr.txt";
    const int status = std::system(cmd.c_str());
    Result r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = io::ReadTextFile(dir_ / "stdout.txt");
    r.err = io::ReadTextFile(dir_ / "stderr.txt");
    return r;
  }

  Bytes Read(const std::string& name) const { return io::ReadFile(dir_ / name); }
  void Write(const std::string& name, ByteSpan data) const {
    io::WriteFileAtomic(dir_ / name, data);
  }

  // Standard key set under a fixed seed.
  void Keys() const {
    REQUIRE(Run("keygen paillier 512 p --seed 01").rc == 0);
    REQUIRE(Run("keygen blowfish 16 bf.key --seed 02").rc == 0);
    REQUIRE(Run("keygen rsa 512 r --seed 03").rc == 0);
  }

 private:
  fs::path dir_;
};

const char* kMultilevelKeys = " --paillier p.pub --blowfish bf.key";
const char* kMultilevelPriv = " --paillier p.key --blowfish bf.key";

TEST_CASE("keygen writes reloadable keys and a fingerprint") {
  Sandbox s;
  const Result r = s.Run("keygen rsa 512 r --seed 0a");
  REQUIRE(r.rc == 0);
  CHECK(fs::exists(s.Path("r.pub")));
  CHECK(fs::exists(s.Path("r.key")));
  const std::string pub = io::ReadTextFile(s.Path("r.pub"));
  CHECK(r.out.find("fingerprint " + keyfile::Fingerprint(pub)) != std::string::npos);
  const rsa::KeyPair k = keyfile::ParseRsaPrivate(io::ReadTextFile(s.Path("r.key")));
  CHECK(BitLength(k.n) >= 511);
  CHECK(keyfile::ParseRsaPublic(pub) == k.Public());

  REQUIRE(s.Run("keygen paillier 256 pk").rc == 0);
  CHECK_NOTHROW(keyfile::ParsePaillierPrivate(io::ReadTextFile(s.Path("pk.key"))));
  REQUIRE(s.Run("keygen des 8 d.key").rc == 0);
  CHECK(keyfile::ParseDesKey(io::ReadTextFile(s.Path("d.key"))).size() == 8);
}

TEST_CASE("seeded keygen is reproducible") {
  Sandbox s;
  REQUIRE(s.Run("keygen rsa 256 a --seed 1234").rc == 0);
  REQUIRE(s.Run("keygen rsa 256 b --seed 1234").rc == 0);
  CHECK(s.Read("a.key") == s.Read("b.key"));
  REQUIRE(s.Run("keygen blowfish 20 x --seed 99").rc == 0);
  REQUIRE(s.Run("keygen blowfish 20 y --seed 99").rc == 0);
  CHECK(s.Read("x") == s.Read("y"));
  REQUIRE(s.Run("keygen rsa 256 c --seed 1235").rc == 0);
  CHECK(s.Read("a.key") != s.Read("c.key"));
}

TEST_CASE("usage errors exit 2") {
  Sandbox s;
  Result r = s.Run("keygen rsa 15 r");
  CHECK(r.rc == 2);
  CHECK(r.err.find("usage") != std::string::npos);
  CHECK(s.Run("keygen paillier 10 p").rc == 2);
  CHECK(s.Run("keygen blowfish 3 k").rc == 2);
  CHECK(s.Run("keygen des 7 k").rc == 2);
  CHECK(s.Run("keygen aes 128 k").rc == 2);
  CHECK(s.Run("").rc == 2);
  CHECK(s.Run("encrypt rot13 a b").rc == 2);
  CHECK(s.Run("bench --sizes 4").rc == 2);
  CHECK(s.Run("keygen rsa 64 r --seed xyz").rc == 2);
  CHECK(s.Run("--help").rc == 0);
}

TEST_CASE("multilevel round trip on a 1 MiB file") {
  Sandbox s;
  s.Keys();
  SystemRandom rng;
  const Bytes data = rng.Generate(1 << 20);
  s.Write("in.bin", data);
  REQUIRE(s.Run(std::string("encrypt multilevel in.bin ct") + kMultilevelKeys).rc == 0);
  const Result r = s.Run(std::string("decrypt multilevel ct out.bin") + kMultilevelPriv);
  REQUIRE(r.rc == 0);
  CHECK(r.err.empty());
  CHECK(s.Read("out.bin") == data);
}

TEST_CASE("desrsa round trip on a 1 MiB file") {
  Sandbox s;
  s.Keys();
  SystemRandom rng;
  const Bytes data = rng.Generate(1 << 20);
  s.Write("in.bin", data);
  REQUIRE(s.Run("encrypt desrsa in.bin ct --rsa r.pub").rc == 0);
  REQUIRE(s.Run("decrypt desrsa ct out.bin --rsa r.key").rc == 0);
  CHECK(s.Read("out.bin") == data);
}

TEST_CASE("seeded encryption is deterministic") {
  Sandbox s;
  s.Keys();
  s.Write("in.bin", Bytes(100, 0x42));
  REQUIRE(s.Run(std::string("encrypt multilevel in.bin a --seed 77") + kMultilevelKeys).rc == 0);
  REQUIRE(s.Run(std::string("encrypt multilevel in.bin b --seed 77") + kMultilevelKeys).rc == 0);
  CHECK(s.Read("a") == s.Read("b"));
  REQUIRE(s.Run("encrypt desrsa in.bin c --seed 77 --rsa r.pub").rc == 0);
  REQUIRE(s.Run("encrypt desrsa in.bin d --seed 77 --rsa r.pub").rc == 0);
  CHECK(s.Read("c") == s.Read("d"));
}

TEST_CASE("classified failures") {
  Sandbox s;
  s.Keys();
  SystemRandom rng;
  s.Write("in.bin", rng.Generate(4096));
  REQUIRE(s.Run(std::string("encrypt multilevel in.bin ml") + kMultilevelKeys).rc == 0);
  REQUIRE(s.Run("encrypt desrsa in.bin dr --rsa r.pub").rc == 0);

  for (const char* name : {"ml", "dr"}) {
    Bytes t = s.Read(name);
    t[t.size() / 2] ^= 0x5a;
    s.Write("t", t);
    const Result r = std::string(name) == "ml"
                         ? s.Run(std::string("decrypt multilevel t out") + kMultilevelPriv)
                         : s.Run("decrypt desrsa t out --rsa r.key");
    CHECK(r.rc == 1);
    CHECK(r.err.find("integrity") != std::string::npos);
    CHECK_FALSE(fs::exists(s.Path("out")));
  }

  Result r = s.Run("decrypt desrsa ml out --rsa r.key");
  CHECK(r.rc == 1);
  CHECK(r.err.find("layer stack") != std::string::npos);
  r = s.Run(std::string("decrypt multilevel dr out") + kMultilevelPriv);
  CHECK(r.rc == 1);
  CHECK(r.err.find("layer stack") != std::string::npos);

  REQUIRE(s.Run("keygen paillier 512 p2 --seed 09").rc == 0);
  r = s.Run("decrypt multilevel ml out --paillier p2.key --blowfish bf.key");
  CHECK(r.rc == 1);
  CHECK(r.err.find("key") != std::string::npos);

  Bytes last = s.Read("dr");
  last.back() ^= 0x01;
  s.Write("t", last);
  r = s.Run("decrypt desrsa t out --rsa r.key");
  CHECK(r.rc == 1);
  CHECK(r.err.find("padding") != std::string::npos);

  r = s.Run("decrypt desrsa missing out --rsa r.key");
  CHECK(r.rc == 1);
  r = s.Run("decrypt desrsa dr out --rsa r.pub");
  CHECK(r.rc == 1);
  CHECK(r.err.find("key file") != std::string::npos);
}

TEST_CASE("vault commands") {
  Sandbox s;
  s.Keys();
  s.Write("five", Bytes{5});
  s.Write("seven", Bytes{7});
  REQUIRE(s.Run(std::string("encrypt multilevel five e5") + kMultilevelKeys).rc == 0);
  REQUIRE(s.Run(std::string("encrypt multilevel seven e7") + kMultilevelKeys).rc == 0);
  REQUIRE(s.Run("put b e7 --vault v").rc == 0);
  REQUIRE(s.Run("put a e5 --vault v").rc == 0);
  Result r = s.Run("list --vault v");
  REQUIRE(r.rc == 0);
  CHECK(r.out.rfind("a\tBLOWFISH_CBC,PAILLIER\t", 0) == 0);
  CHECK(r.out.find("\nb\tBLOWFISH_CBC,PAILLIER\t") != std::string::npos);

  CHECK(s.Run("put a e7 --vault v").rc == 1);
  CHECK(s.Run("put a e5 --vault v --overwrite").rc == 0);
  CHECK(s.Run("put a/b e5 --vault v").rc == 1);

  REQUIRE(s.Run(std::string("hadd a b sum --vault v --paillier p.pub --blowfish bf.key")).rc == 0);
  REQUIRE(s.Run("get sum sum.cvlt --vault v").rc == 0);
  REQUIRE(s.Run(std::string("decrypt multilevel sum.cvlt sum.txt --integers") + kMultilevelPriv).rc == 0);
  CHECK(io::ReadTextFile(s.Path("sum.txt")) == "12\n");
  r = s.Run(std::string("decrypt multilevel sum.cvlt sum.bin") + kMultilevelPriv);
  CHECK(r.rc == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(s.Read("sum.bin") == Bytes{12});

  r = s.Run("get nope x --vault v");
  CHECK(r.rc == 1);
  CHECK(r.err.find("not found") != std::string::npos);
  CHECK(s.Run("fsck --vault v").rc == 0);
  CHECK(s.Run("list --vault nowhere").rc == 1);
}

TEST_CASE("bench table") {
  Sandbox s;
  const Result r = s.Run(
      "bench --sizes 64,1024 --iterations 2 --paillier-bits 128 --rsa-bits 256 "
      "--out table.tsv --seed 01");
  REQUIRE(r.rc == 0);
  CHECK(r.out.rfind("#algorithm\tbytes\tmbps_mean\tmbps_min\tmbps_max\titerations\n", 0) == 0);
  for (const char* name : {"blowfish-cbc\t64\t", "des-cbc\t1024\t", "multilevel\t64\t",
                           "desrsa\t1024\t"}) {
    CHECK(r.out.find(std::string("\n") + name) != std::string::npos);
  }
  CHECK(r.out.find("# 1024 bytes: Blowfish-CBC") != std::string::npos);
  CHECK(io::ReadTextFile(s.Path("table.tsv")) == r.out);
}

}  // namespace
}  // namespace cryptvault
