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

#include "cryptvault/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "cryptvault/blowfish.h"
#include "cryptvault/cpu.h"
#include "cryptvault/des.h"
#include "cryptvault/envelope.h"
#include "cryptvault/errors.h"
#include "cryptvault/modes.h"
#include "cryptvault/paillier.h"
#include "cryptvault/rsa.h"

namespace cryptvault::bench {
namespace {

// Keeps results observable so the optimizer cannot drop the work.
volatile std::uint8_t g_sink;

Row Measure(const std::string& name, std::size_t bytes, int iterations,
            const std::function<std::uint8_t()>& run) {
  using Clock = std::chrono::steady_clock;
  g_sink = run();
  Row row{name, bytes, 0, 0, 0, iterations};
  double sum = 0;
  for (int i = 0; i < iterations; ++i) {
    const auto start = Clock::now();
    g_sink = run();
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    const double mbps =
        static_cast<double>(bytes) / 1e6 / std::max(elapsed.count(), 1e-9);
    sum += mbps;
    row.mbps_min = i == 0 ? mbps : std::min(row.mbps_min, mbps);
    row.mbps_max = i == 0 ? mbps : std::max(row.mbps_max, mbps);
  }
  row.mbps_mean = sum / iterations;
  return row;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::vector<Row> Run(const Options& options, RandomSource& rng) {
  if (options.iterations < 1) {
    throw InvalidArgumentError("iterations must be >= 1");
  }
  for (std::size_t size : options.sizes) {
    if (size < 8) throw InvalidArgumentError("bench sizes must be >= 8 bytes");
  }
  const Bytes bf_key = rng.Generate(16);
  const blowfish::Cipher bf(bf_key);
  const des::Cipher des(rng.Generate(8));
  const Bytes iv = rng.Generate(8);
  const paillier::PrivateKey paillier_key =
      paillier::Generate(options.paillier_bits, rng);
  const rsa::KeyPair rsa_key = rsa::Generate(options.rsa_bits, rng);

  std::vector<Row> rows;
  const int it = options.iterations;
  for (std::size_t size : options.sizes) {
    const Bytes data = rng.Generate(size);
    const Bytes padded = Pkcs7Pad(data);

    rows.push_back(Measure("blowfish-cbc", size, it, [&] {
      return CbcEncrypt(bf, iv, padded).back();
    }));
    rows.push_back(Measure("des-cbc", size, it, [&] {
      return CbcEncrypt(des, iv, padded).back();
    }));
    if (options.kernel_rows) {
      const Bytes bf_ct = CbcEncrypt(bf, iv, padded);
      const Bytes des_ct = CbcEncrypt(des, iv, padded);
      for (Kernel k : AvailableKernels()) {
        const std::string suffix = "-dec-" + std::string(KernelName(k));
        ForceKernel(k);
        rows.push_back(Measure("blowfish-cbc" + suffix, size, it, [&] {
          return CbcDecrypt(bf, iv, bf_ct).back();
        }));
        rows.push_back(Measure("des-cbc" + suffix, size, it, [&] {
          return CbcDecrypt(des, iv, des_ct).back();
        }));
        ForceKernel(std::nullopt);
      }
    }
    rows.push_back(Measure("multilevel", size, it, [&] {
      return EncryptMultilevel(data, paillier_key.pub, bf_key, rng).body.back();
    }));
    rows.push_back(Measure("desrsa", size, it, [&] {
      return EncryptDesRsa(data, rsa_key.Public(), rng).body.back();
    }));
  }
  return rows;
}

std::string FormatTable(const std::vector<Row>& rows) {
  std::string out = "#algorithm\tbytes\tmbps_mean\tmbps_min\tmbps_max\titerations\n";
  for (const Row& r : rows) {
    out += r.algorithm + '\t' + std::to_string(r.bytes) + '\t' +
           FormatDouble(r.mbps_mean) + '\t' + FormatDouble(r.mbps_min) + '\t' +
           FormatDouble(r.mbps_max) + '\t' + std::to_string(r.iterations) + '\n';
  }
  return out;
}

std::vector<Row> ParseTable(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Row r;
    if (!(fields >> r.algorithm >> r.bytes >> r.mbps_mean >> r.mbps_min >>
          r.mbps_max >> r.iterations)) {
      throw ParseError("malformed bench row: " + line);
    }
    rows.push_back(r);
  }
  return rows;
}

std::string Summary(const std::vector<Row>& rows) {
  std::string out;
  for (const Row& bf : rows) {
    if (bf.algorithm != "blowfish-cbc") continue;
    for (const Row& des : rows) {
      if (des.algorithm != "des-cbc" || des.bytes != bf.bytes) continue;
      const bool faster = bf.mbps_mean > des.mbps_mean;
      out += std::to_string(bf.bytes) + " bytes: Blowfish-CBC " +
             FormatDouble(bf.mbps_mean) + " MB/s vs DES-CBC " +
             FormatDouble(des.mbps_mean) + " MB/s (" +
             FormatDouble(des.mbps_mean > 0 ? bf.mbps_mean / des.mbps_mean : 0) +
             "x) -> " + (faster ? "Blowfish faster" : "DES faster") + '\n';
    }
  }
  return out;
}

std::string FormatReport(const std::vector<Row>& rows) {
  std::string out = FormatTable(rows);
  std::istringstream lines(Summary(rows));
  for (std::string line; std::getline(lines, line);) out += "# " + line + '\n';
  return out;
}

}  // namespace cryptvault::bench
