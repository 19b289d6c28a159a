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

#include "cryptvault/paillier.h"

#include <string>

#include "cryptvault/errors.h"

namespace cryptvault::paillier {

std::size_t PublicKey::ChunkBytes() const {
  const std::size_t bits = BitLength(n_);
  if (bits < 17) return 0;
  return (bits - 1) / 8 - 1;
}

BigInt LFunction(const BigInt& x, const BigInt& n) { return (x - 1) / n; }

namespace {

std::pair<BigInt, BigInt> Ordered(const BigInt& a, const BigInt& b) {
  return a < b ? std::pair(a, b) : std::pair(b, a);
}

CrtParams MakeCrt(const BigInt& p0, const BigInt& q0) {
  const auto [p, q] = Ordered(p0, q0);
  CrtParams k;
  k.p = p;
  k.q = q;
  k.p_squared = p * p;
  k.q_squared = q * q;
  const BigInt g = p * q + 1;
  k.hp = InvMod(LFunction(PowMod(g, p - 1, k.p_squared), p), p);
  k.hq = InvMod(LFunction(PowMod(g, q - 1, k.q_squared), q), q);
  k.q_inv_p = InvMod(q, p);
  return k;
}

}  // namespace

PrivateKey FromPrimes(const BigInt& p, const BigInt& q) {
  if (p == q) throw InvalidArgumentError("Paillier primes must be distinct");
  const BigInt n = p * q;
  if (Gcd(n, (p - 1) * (q - 1)) != 1) {
    throw InvalidArgumentError("gcd(n, (p-1)(q-1)) != 1");
  }
  PublicKey pub(n);
  const BigInt lambda = Lcm(p - 1, q - 1);
  const BigInt u = LFunction(PowMod(pub.g(), lambda, pub.n_squared()), n);
  return {pub, lambda, InvMod(u, n), MakeCrt(p, q)};
}

std::optional<std::pair<BigInt, BigInt>> RecoverFactors(const BigInt& n,
                                                        const BigInt& lambda) {
  if (n < 6 || lambda <= 0) return std::nullopt;
  BigInt t = lambda;
  std::size_t s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t >>= 1;
    ++s;
  }
  const BigInt n1 = n - 1;
  for (unsigned long a = 2; a < 200; ++a) {
    const BigInt g = Gcd(BigInt(a), n);
    if (g != 1) {
      if (g == n) continue;
      return Ordered(g, n / g);
    }
    BigInt x = PowMod(BigInt(a), t, n);
    if (x == 1 || x == n1) continue;
    for (std::size_t i = 0; i < s; ++i) {
      const BigInt y = x * x % n;
      if (y == 1) {
        const BigInt f = Gcd(x - 1, n);
        return Ordered(f, n / f);
      }
      if (y == n1) break;
      x = y;
    }
  }
  return std::nullopt;
}

void EnableCrt(PrivateKey& key) {
  const auto factors = RecoverFactors(key.pub.n(), key.lambda);
  if (!factors || factors->first * factors->second != key.pub.n()) return;
  key.crt = MakeCrt(factors->first, factors->second);
}

PrivateKey Generate(std::size_t bits, RandomSource& rng) {
  if (bits < 16 || bits % 2 != 0) {
    throw InvalidArgumentError(
        "Paillier modulus size must be even and >= 16, got " +
        std::to_string(bits));
  }
  for (;;) {
    const BigInt p = GeneratePrime(bits / 2, rng);
    const BigInt q = GeneratePrime(bits / 2, rng);
    if (p == q || Gcd(p * q, (p - 1) * (q - 1)) != 1) continue;
    return FromPrimes(p, q);
  }
}

void Validate(const PublicKey& key) {
  if (key.n() < 6 || mpz_even_p(key.n().get_mpz_t())) {
    throw InvalidArgumentError("Paillier modulus must be odd and > 5");
  }
}

void Validate(const PrivateKey& key) {
  Validate(key.pub);
  const BigInt& n = key.pub.n();
  if (key.lambda <= 0 || Gcd(n, key.lambda) != 1) {
    throw InvalidArgumentError("gcd(n, lambda) != 1");
  }
  const BigInt u =
      LFunction(PowMod(key.pub.g(), key.lambda, key.pub.n_squared()), n);
  if (key.mu * u % n != 1) {
    throw InvalidArgumentError("mu * L(g^lambda mod n^2) != 1 mod n");
  }
  if (key.crt && (key.crt->p * key.crt->q != n || *key.crt != MakeCrt(key.crt->p, key.crt->q))) {
    throw InvalidArgumentError("CRT parameters do not match n");
  }
}

BigInt Encrypt(const PublicKey& key, const BigInt& m, const BigInt& r) {
  const BigInt& n = key.n();
  if (m < 0 || m >= n) throw MessageRangeError("message is outside [0, n)");
  if (r < 1 || r >= n || Gcd(r, n) != 1) {
    throw RandomnessError("r must be a unit in [1, n)");
  }
  // g^m = (1 + n)^m = 1 + m*n (mod n^2).
  const BigInt gm = (1 + m * n) % key.n_squared();
  return gm * PowMod(r, n, key.n_squared()) % key.n_squared();
}

BigInt Encrypt(const PublicKey& key, const BigInt& m, RandomSource& rng) {
  for (;;) {
    const BigInt r = RandomInRange(1, key.n(), rng);
    if (Gcd(r, key.n()) == 1) return Encrypt(key, m, r);
  }
}

void CheckCiphertext(const PublicKey& key, const BigInt& c) {
  if (c < 0 || c >= key.n_squared()) {
    throw CiphertextRangeError("ciphertext is outside [0, n^2)");
  }
}

BigInt Decrypt(const PrivateKey& key, const BigInt& c) {
  CheckCiphertext(key.pub, c);
  const BigInt& n = key.pub.n();
  if (Gcd(c, n) != 1) throw CiphertextRangeError("ciphertext is not a unit");
  if (key.crt) {
    const CrtParams& k = *key.crt;
    const BigInt mp =
        LFunction(PowMod(c, k.p - 1, k.p_squared), k.p) * k.hp % k.p;
    const BigInt mq =
        LFunction(PowMod(c, k.q - 1, k.q_squared), k.q) * k.hq % k.q;
    BigInt diff = (mp - mq) % k.p;
    if (diff < 0) diff += k.p;
    return mq + k.q * (diff * k.q_inv_p % k.p);
  }
  const BigInt u = LFunction(PowMod(c, key.lambda, key.pub.n_squared()), n);
  return u * key.mu % n;
}

BigInt Add(const PublicKey& key, const BigInt& c1, const BigInt& c2) {
  CheckCiphertext(key, c1);
  CheckCiphertext(key, c2);
  return c1 * c2 % key.n_squared();
}

}  // namespace cryptvault::paillier
