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

#ifndef CRYPTVAULT_PAILLIER_H_
#define CRYPTVAULT_PAILLIER_H_

#include <cstddef>
#include <optional>
#include <utility>

#include "cryptvault/bigint.h"
#include "cryptvault/random.h"

// Paillier with the simplified generator g = n + 1. Ciphertexts live in
// [0, n^2) and multiply to add their plaintexts mod n.
namespace cryptvault::paillier {

class PublicKey {
 public:
  PublicKey() = default;
  explicit PublicKey(BigInt n) : n_(std::move(n)), n_squared_(n_ * n_) {}

  const BigInt& n() const { return n_; }
  const BigInt& n_squared() const { return n_squared_; }
  BigInt g() const { return n_ + 1; }

  // Plaintext bytes per chunk in the pipeline: floor((bits(n) - 1) / 8) - 1,
  // which keeps every chunk value, and the sum of two, below n. Zero for
  // moduli too small to carry data.
  std::size_t ChunkBytes() const;

  friend bool operator==(const PublicKey& a, const PublicKey& b) {
    return a.n_ == b.n_;
  }

 private:
  BigInt n_;
  BigInt n_squared_;
};

// Factors of n (p < q) and the per-prime constants for decryption mod p^2
// and q^2: h_p = L_p(g^(p-1) mod p^2)^-1 mod p, likewise h_q.
struct CrtParams {
  BigInt p, q;
  BigInt p_squared, q_squared;
  BigInt hp, hq;
  BigInt q_inv_p;  // q^-1 mod p

  friend bool operator==(const CrtParams&, const CrtParams&) = default;
};

struct PrivateKey {
  PublicKey pub;
  BigInt lambda;
  BigInt mu;
  // Present when the factors are known; Decrypt then works mod p^2 and
  // q^2 and recombines. Results are identical either way.
  std::optional<CrtParams> crt;

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

// L(x) = (x - 1) / n.
BigInt LFunction(const BigInt& x, const BigInt& n);

// Two bits/2-bit primes. InvalidArgumentError unless bits is even and
// >= 16.
PrivateKey Generate(std::size_t bits, RandomSource& rng);

// InvalidArgumentError if p == q or gcd(n, (p-1)(q-1)) != 1.
PrivateKey FromPrimes(const BigInt& p, const BigInt& q);

// Factors n from the Carmichael exponent lambda by the square-root-of-one
// method. std::nullopt if no small base splits n.
std::optional<std::pair<BigInt, BigInt>> RecoverFactors(const BigInt& n,
                                                        const BigInt& lambda);

// Fills key.crt from RecoverFactors(); leaves it empty on failure.
void EnableCrt(PrivateKey& key);

// mu * L(g^lambda mod n^2) = 1 mod n and gcd(n, lambda) = 1; p * q = n
// when CRT parameters are present.
void Validate(const PrivateKey& key);
void Validate(const PublicKey& key);

// g^m * r^n mod n^2. MessageRangeError unless 0 <= m < n; RandomnessError
// unless r is in [1, n) and coprime to n.
BigInt Encrypt(const PublicKey& key, const BigInt& m, const BigInt& r);
// Same with r drawn uniformly from the units of Z/n.
BigInt Encrypt(const PublicKey& key, const BigInt& m, RandomSource& rng);

// L(c^lambda mod n^2) * mu mod n. CiphertextRangeError unless c is in
// [0, n^2) and coprime to n.
BigInt Decrypt(const PrivateKey& key, const BigInt& c);

// c1 * c2 mod n^2, decrypting to m1 + m2 mod n.
BigInt Add(const PublicKey& key, const BigInt& c1, const BigInt& c2);

// Range check shared by Add and the pipeline parsers.
void CheckCiphertext(const PublicKey& key, const BigInt& c);

}  // namespace cryptvault::paillier

#endif  // CRYPTVAULT_PAILLIER_H_
