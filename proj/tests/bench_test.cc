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

#include <set>

#include "cryptvault/bench.h"
#include "cryptvault/cpu.h"
#include "cryptvault/errors.h"
#include "cryptvault/random.h"

namespace cryptvault::bench {
namespace {

Options Small() {
  Options o;
  o.sizes = {64, 4096};
  o.iterations = 2;
  o.paillier_bits = 128;
  o.rsa_bits = 256;
  return o;
}

TEST_CASE("one row per algorithm and size") {
  SeededRandom rng(100);
  const auto rows = Run(Small(), rng);
  const std::size_t per_size = 4 + 2 * AvailableKernels().size();
  CHECK(rows.size() == 2 * per_size);
  std::set<std::pair<std::string, std::size_t>> seen;
  for (const Row& r : rows) {
    CHECK(seen.insert({r.algorithm, r.bytes}).second);
    CHECK(r.iterations == 2);
    CHECK(r.mbps_min <= r.mbps_mean);
    CHECK(r.mbps_mean <= r.mbps_max);
    CHECK(r.mbps_min > 0);
  }
  for (const char* name : {"blowfish-cbc", "des-cbc", "multilevel", "desrsa"}) {
    CHECK(seen.count({name, 64}) == 1);
    CHECK(seen.count({name, 4096}) == 1);
  }
}

TEST_CASE("table round trip") {
  SeededRandom rng(101);
  Options o = Small();
  o.kernel_rows = false;
  o.sizes = {64};
  const auto rows = Run(o, rng);
  const std::string table = FormatTable(rows);
  CHECK(table.rfind("#algorithm\tbytes\tmbps_mean\tmbps_min\tmbps_max\titerations\n", 0) == 0);
  const auto parsed = ParseTable(table);
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].algorithm == rows[i].algorithm);
    CHECK(parsed[i].bytes == rows[i].bytes);
    CHECK(parsed[i].mbps_mean == doctest::Approx(rows[i].mbps_mean).epsilon(1e-3));
  }
  CHECK(Summary(rows).find("64 bytes: Blowfish-CBC") != std::string::npos);
  const std::string report = FormatReport(rows);
  CHECK(report.find("\n# 64 bytes: Blowfish-CBC") != std::string::npos);
  CHECK(ParseTable(report).size() == rows.size());
  CHECK_THROWS_AS(ParseTable("des-cbc\tx\n"), ParseError);
}

TEST_CASE("argument checks") {
  SeededRandom rng(102);
  Options o = Small();
  o.sizes = {7};
  CHECK_THROWS_AS(Run(o, rng), InvalidArgumentError);
  o = Small();
  o.iterations = 0;
  CHECK_THROWS_AS(Run(o, rng), InvalidArgumentError);
}

}  // namespace
}  // namespace cryptvault::bench
