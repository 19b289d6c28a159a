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

#ifndef CRYPTVAULT_RANDOM_H_
#define CRYPTVAULT_RANDOM_H_

#include <cstdint>
#include <memory>
#include <random>

#include "cryptvault/bytes.h"

namespace cryptvault {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void Fill(MutableByteSpan out) = 0;

  Bytes Generate(std::size_t n) {
    Bytes out(n);
    Fill(out);
    return out;
  }
};

// Kernel entropy via getrandom(2).
class SystemRandom final : public RandomSource {
 public:
  void Fill(MutableByteSpan out) override;
};

// Reproducible stream for fixtures and tests. NOT cryptographically secure:
// the output is a Mersenne Twister keyed by the seed bytes.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(ByteSpan seed);
  explicit SeededRandom(std::uint64_t seed);

  void Fill(MutableByteSpan out) override;

 private:
  std::mt19937_64 engine_;
};

// SeededRandom when seed is non-empty, SystemRandom otherwise.
std::unique_ptr<RandomSource> MakeRandom(ByteSpan seed);

}  // namespace cryptvault

#endif  // CRYPTVAULT_RANDOM_H_
