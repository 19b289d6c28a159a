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

#include "cryptvault/random.h"

#include <sys/random.h>

#include <cerrno>
#include <cstring>
#include <string>

#include "cryptvault/errors.h"

namespace cryptvault {

void SystemRandom::Fill(MutableByteSpan out) {
  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t n = getrandom(out.data() + done, out.size() - done, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw RandomnessError(std::string("getrandom: ") + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
}

SeededRandom::SeededRandom(ByteSpan seed) {
  std::seed_seq seq(seed.begin(), seed.end());
  engine_.seed(seq);
}

SeededRandom::SeededRandom(std::uint64_t seed) {
  std::uint8_t bytes[8];
  StoreBe64(seed, bytes);
  std::seed_seq seq(std::begin(bytes), std::end(bytes));
  engine_.seed(seq);
}

void SeededRandom::Fill(MutableByteSpan out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = engine_();
    for (int k = 0; k < 8 && i < out.size(); ++k, ++i) {
      out[i] = static_cast<std::uint8_t>(word);
      word >>= 8;
    }
  }
}

std::unique_ptr<RandomSource> MakeRandom(ByteSpan seed) {
  if (seed.empty()) return std::make_unique<SystemRandom>();
  return std::make_unique<SeededRandom>(seed);
}

}  // namespace cryptvault
