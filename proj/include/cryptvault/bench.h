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

#ifndef CRYPTVAULT_BENCH_H_
#define CRYPTVAULT_BENCH_H_

#include <cstddef>
#include <string>
#include <vector>

#include "cryptvault/random.h"

namespace cryptvault::bench {

struct Options {
  std::vector<std::size_t> sizes = {1 << 20};
  int iterations = 3;
  std::size_t paillier_bits = 512;
  std::size_t rsa_bits = 1024;
  // Include CBC decryption rows timed on each available kernel.
  bool kernel_rows = true;
};

struct Row {
  std::string algorithm;  // blowfish-cbc, des-cbc, multilevel, desrsa, ...
  std::size_t bytes = 0;
  double mbps_mean = 0;
  double mbps_min = 0;
  double mbps_max = 0;
  int iterations = 0;
};

// One warm-up run, then `iterations` timed runs per (algorithm, size).
// Throughput is plaintext bytes / 10^6 per second. InvalidArgumentError for
// sizes below 8 bytes or iterations < 1.
std::vector<Row> Run(const Options& options, RandomSource& rng);

// Tab-separated, first line "#algorithm\tbytes\tmbps_mean\tmbps_min\t
// mbps_max\titerations".
std::string FormatTable(const std::vector<Row>& rows);
std::vector<Row> ParseTable(const std::string& text);

// Human-readable comparison of Blowfish-CBC against DES-CBC per size.
std::string Summary(const std::vector<Row>& rows);

// FormatTable() followed by Summary() as '#' comment lines, so the whole
// report still parses with ParseTable().
std::string FormatReport(const std::vector<Row>& rows);

}  // namespace cryptvault::bench

#endif  // CRYPTVAULT_BENCH_H_
