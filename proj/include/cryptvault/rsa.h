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

#ifndef CRYPTVAULT_RSA_H_
#define CRYPTVAULT_RSA_H_

#include <cstddef>

#include "cryptvault/bigint.h"
#include "cryptvault/random.h"

// Textbook (unpadded) RSA. Deterministic and multiplicatively homomorphic,
// which is the property this module exists to expose; it is not a secure
// general-purpose encryption scheme.
namespace cryptvault::rsa {

inline constexpr unsigned long kDefaultExponent = 65537;

struct PublicKey {
  BigInt n;
  BigInt e;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct KeyPair {
  BigInt n;
  BigInt e;
  BigInt d;
  BigInt p;
  BigInt q;

  PublicKey Public() const { return {n, e}; }

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

// Modulus of exactly `bits` bits from two bits/2-bit primes. Tries e=65537,
// then 257, 17, 5, 3 until one is coprime to lambda(n). Throws
// InvalidArgumentError unless bits is even and >= 16.
KeyPair Generate(std::size_t bits, RandomSource& rng);

// Builds a pair from known primes; d = e^-1 mod lcm(p-1, q-1). Throws
// InvalidArgumentError if p == q or e is not invertible.
KeyPair FromPrimes(const BigInt& p, const BigInt& q, const BigInt& e);

// Throws InvalidArgumentError naming the first invariant that fails:
// p, q distinct primes, n = p*q, e*d = 1 mod lcm(p-1, q-1).
void Validate(const KeyPair& key, RandomSource& rng);
// n > 1 and e > 1.
void Validate(const PublicKey& key);

// m^e mod n. MessageRangeError unless 0 <= m < n.
BigInt Encrypt(const PublicKey& key, const BigInt& m);
// c^d mod n. MessageRangeError unless 0 <= c < n.
BigInt Decrypt(const KeyPair& key, const BigInt& c);
// c1*c2 mod n, which decrypts to m1*m2 mod n.
BigInt HomomorphicMultiply(const PublicKey& key, const BigInt& c1,
                           const BigInt& c2);

}  // namespace cryptvault::rsa

#endif  // CRYPTVAULT_RSA_H_
