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

#include "cryptvault/bigint.h"

#include <array>
#include <vector>

#include "cryptvault/errors.h"

namespace cryptvault {
namespace {

constexpr auto kSmallPrimes = [] {
  std::array<bool, 1000> composite{};
  std::array<unsigned, 168> primes{};
  std::size_t count = 0;
  for (unsigned i = 2; i < 1000; ++i) {
    if (composite[i]) continue;
    primes[count++] = i;
    for (unsigned j = i * i; j < 1000; j += i) composite[j] = true;
  }
  return primes;
}();

bool MillerRabinWitness(const BigInt& n, const BigInt& a, const BigInt& d,
                        std::size_t s) {
  const BigInt n1 = n - 1;
  BigInt x = PowMod(a, d, n);
  if (x == 1 || x == n1) return false;
  for (std::size_t i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return false;
  }
  return true;
}

// True when n has no prime factor below 1000 (or is itself such a prime).
bool PassesTrialDivision(const BigInt& n) {
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return true;
}

}  // namespace

std::size_t BitLength(const BigInt& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t ByteLength(const BigInt& x) { return (BitLength(x) + 7) / 8; }

Bytes ToBytes(const BigInt& x, std::size_t width) {
  if (x < 0) throw InvalidArgumentError("negative integer");
  const std::size_t len = ByteLength(x);
  if (width != 0 && len > width) {
    throw InvalidArgumentError("integer does not fit in " +
                               std::to_string(width) + " bytes");
  }
  Bytes out(width == 0 ? len : width, 0);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (out.size() - len), &written, 1, 1, 1, 0,
               x.get_mpz_t());
  }
  return out;
}

BigInt FromBytes(ByteSpan bytes) {
  BigInt out;
  if (!bytes.empty()) {
    mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return out;
}

std::string ToHexString(const BigInt& x) { return x.get_str(16); }

BigInt FromHexString(std::string_view hex) {
  if (hex.empty()) throw ParseError("empty hex integer");
  for (char c : hex) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
                    (c >= 'A' && c <= 'F');
    if (!ok) throw ParseError("invalid hex digit '" + std::string(1, c) + "'");
  }
  return BigInt(std::string(hex), 16);
}

BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           mod.get_mpz_t());
  return out;
}

BigInt Gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt InvMod(const BigInt& a, const BigInt& mod) {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw InvalidArgumentError("no modular inverse");
  }
  return out;
}

BigInt RandomBelow(const BigInt& bound, RandomSource& rng) {
  if (bound <= 0) throw InvalidArgumentError("RandomBelow: bound must be > 0");
  const std::size_t bits = BitLength(bound);
  const std::size_t bytes = (bits + 7) / 8;
  const unsigned top_mask = 0xFFu >> (8 * bytes - bits);
  Bytes buf(bytes);
  for (;;) {
    rng.Fill(buf);
    buf[0] &= static_cast<std::uint8_t>(top_mask);
    BigInt candidate = FromBytes(buf);
    if (candidate < bound) return candidate;
  }
}

BigInt RandomInRange(const BigInt& low, const BigInt& high, RandomSource& rng) {
  if (high <= low) throw InvalidArgumentError("RandomInRange: empty range");
  return low + RandomBelow(high - low, rng);
}

bool IsProbablePrime(const BigInt& n, RandomSource& rng, int rounds) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // No factor below 1000 and n > 997 means n < 10^6 is already prime.
  if (n < 1000 * 1000) return true;

  BigInt d = n - 1;
  std::size_t s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (int i = 0; i < rounds; ++i) {
    const BigInt a = RandomInRange(2, n - 1, rng);
    if (MillerRabinWitness(n, a, d, s)) return false;
  }
  return true;
}

BigInt GeneratePrime(std::size_t bits, RandomSource& rng, int max_candidates) {
  if (bits < 2) throw InvalidArgumentError("prime size must be >= 2 bits");
  const std::size_t bytes = (bits + 7) / 8;
  Bytes buf(bytes);
  // A candidate is a draw that survives trial division; draws rejected by
  // the small-prime sieve are bounded separately.
  long draws_left = 1000L * max_candidates;
  for (int candidates = 0; candidates < max_candidates && draws_left > 0;
       --draws_left) {
    rng.Fill(buf);
    BigInt candidate = FromBytes(buf);
    // Keep exactly `bits` bits, force the top two and the low bit.
    candidate &= (BigInt(1) << bits) - 1;
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    if (bits > 2) mpz_setbit(candidate.get_mpz_t(), bits - 2);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (!PassesTrialDivision(candidate)) continue;
    ++candidates;
    if (IsProbablePrime(candidate, rng)) return candidate;
  }
  throw PrimeGenerationError("no " + std::to_string(bits) + "-bit prime in " +
                             std::to_string(max_candidates) + " candidates");
}

}  // namespace cryptvault
