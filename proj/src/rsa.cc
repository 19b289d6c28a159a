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

#include "cryptvault/rsa.h"

#include <string>

#include "cryptvault/errors.h"

namespace cryptvault::rsa {
namespace {

void CheckRange(const BigInt& x, const BigInt& n, const char* what) {
  if (x < 0 || x >= n) {
    throw MessageRangeError(std::string(what) + " is outside [0, n)");
  }
}

BigInt Lambda(const BigInt& p, const BigInt& q) { return Lcm(p - 1, q - 1); }

}  // namespace

KeyPair FromPrimes(const BigInt& p, const BigInt& q, const BigInt& e) {
  if (p == q) throw InvalidArgumentError("RSA primes must be distinct");
  const BigInt lambda = Lambda(p, q);
  if (Gcd(e, lambda) != 1) {
    throw InvalidArgumentError("public exponent is not invertible mod lambda");
  }
  return {p * q, e, InvMod(e, lambda), p, q};
}

KeyPair Generate(std::size_t bits, RandomSource& rng) {
  if (bits < 16 || bits % 2 != 0) {
    throw InvalidArgumentError("RSA modulus size must be even and >= 16, got " +
                               std::to_string(bits));
  }
  static constexpr unsigned long kExponents[] = {kDefaultExponent, 257, 17, 5,
                                                 3};
  for (;;) {
    const BigInt p = GeneratePrime(bits / 2, rng);
    BigInt q = GeneratePrime(bits / 2, rng);
    if (p == q) continue;
    const BigInt lambda = Lambda(p, q);
    for (unsigned long e : kExponents) {
      if (Gcd(BigInt(e), lambda) == 1) return FromPrimes(p, q, BigInt(e));
    }
  }
}

void Validate(const PublicKey& key) {
  if (key.n <= 1) throw InvalidArgumentError("modulus must be > 1");
  if (key.e <= 1) throw InvalidArgumentError("public exponent must be > 1");
}

void Validate(const KeyPair& key, RandomSource& rng) {
  Validate(key.Public());
  if (key.p == key.q) throw InvalidArgumentError("p equals q");
  if (!IsProbablePrime(key.p, rng)) throw InvalidArgumentError("p is not prime");
  if (!IsProbablePrime(key.q, rng)) throw InvalidArgumentError("q is not prime");
  if (key.p * key.q != key.n) throw InvalidArgumentError("n != p*q");
  if (key.e * key.d % Lambda(key.p, key.q) != 1) {
    throw InvalidArgumentError("e*d != 1 mod lcm(p-1, q-1)");
  }
}

BigInt Encrypt(const PublicKey& key, const BigInt& m) {
  CheckRange(m, key.n, "message");
  return PowMod(m, key.e, key.n);
}

BigInt Decrypt(const KeyPair& key, const BigInt& c) {
  CheckRange(c, key.n, "ciphertext");
  return PowMod(c, key.d, key.n);
}

BigInt HomomorphicMultiply(const PublicKey& key, const BigInt& c1,
                           const BigInt& c2) {
  CheckRange(c1, key.n, "ciphertext");
  CheckRange(c2, key.n, "ciphertext");
  return c1 * c2 % key.n;
}

}  // namespace cryptvault::rsa
