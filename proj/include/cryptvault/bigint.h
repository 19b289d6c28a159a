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

#ifndef CRYPTVAULT_BIGINT_H_
#define CRYPTVAULT_BIGINT_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "cryptvault/bytes.h"
#include "cryptvault/random.h"

namespace cryptvault {

// Non-negative arbitrary-precision integers throughout; arithmetic is GMP's.
using BigInt = mpz_class;

std::size_t BitLength(const BigInt& x);
std::size_t ByteLength(const BigInt& x);

// Big-endian magnitude. `width` left-pads with zeros; 0 means minimal
// (zero encodes as an empty sequence).
Bytes ToBytes(const BigInt& x, std::size_t width = 0);
BigInt FromBytes(ByteSpan bytes);

// Lowercase hex without prefix; zero is "0".
std::string ToHexString(const BigInt& x);
// Throws ParseError on an empty string or non-hex digit.
BigInt FromHexString(std::string_view hex);

BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& mod);
BigInt Gcd(const BigInt& a, const BigInt& b);
BigInt Lcm(const BigInt& a, const BigInt& b);
// Throws InvalidArgumentError when no inverse exists.
BigInt InvMod(const BigInt& a, const BigInt& mod);

// Uniform in [0, bound), rejection sampled from `rng`. bound must be > 0.
BigInt RandomBelow(const BigInt& bound, RandomSource& rng);
// Uniform in [low, high).
BigInt RandomInRange(const BigInt& low, const BigInt& high, RandomSource& rng);

// Trial division by every prime below 1000, then `rounds` Miller-Rabin
// rounds with random bases drawn from `rng`.
bool IsProbablePrime(const BigInt& n, RandomSource& rng, int rounds = 40);

// Random prime with exactly `bits` bits (top two bits set so a product of
// two such primes has 2*bits bits). Throws PrimeGenerationError after
// `max_candidates` composites.
BigInt GeneratePrime(std::size_t bits, RandomSource& rng,
                     int max_candidates = 1000);

}  // namespace cryptvault

#endif  // CRYPTVAULT_BIGINT_H_
