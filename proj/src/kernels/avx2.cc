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

// Eight blocks per iteration, one per 32-bit lane. S-box and SP-table
// lookups are AVX2 gathers; the remainder is handled by the scalar kernel.

#include <immintrin.h>

#include <cstdint>
#include <utility>

#include "cryptvault/bytes.h"
#include "des_tables.h"
#include "kernels/kernels.h"

namespace cryptvault::kernels {
namespace {

inline __m256i ByteSwap32(__m256i v) {
  const __m256i mask = _mm256_setr_epi8(
      3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12,
      3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12);
  return _mm256_shuffle_epi8(v, mask);
}

// 64 bytes of interleaved big-endian (L, R) pairs into lane-per-block halves.
inline void LoadHalves(const std::uint8_t* in, __m256i& l, __m256i& r) {
  const __m256i split = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
  __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in));
  __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + 32));
  a = _mm256_permutevar8x32_epi32(ByteSwap32(a), split);
  b = _mm256_permutevar8x32_epi32(ByteSwap32(b), split);
  l = _mm256_permute2x128_si256(a, b, 0x20);
  r = _mm256_permute2x128_si256(a, b, 0x31);
}

inline void StoreHalves(__m256i l, __m256i r, std::uint8_t* out) {
  const __m256i merge = _mm256_setr_epi32(0, 4, 1, 5, 2, 6, 3, 7);
  __m256i a = _mm256_permute2x128_si256(l, r, 0x20);
  __m256i b = _mm256_permute2x128_si256(l, r, 0x31);
  a = ByteSwap32(_mm256_permutevar8x32_epi32(a, merge));
  b = ByteSwap32(_mm256_permutevar8x32_epi32(b, merge));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), a);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 32), b);
}

inline __m256i BlowfishF(const int* s, __m256i x) {
  const __m256i byte = _mm256_set1_epi32(0xFF);
  const __m256i a = _mm256_srli_epi32(x, 24);
  const __m256i b = _mm256_and_si256(_mm256_srli_epi32(x, 16), byte);
  const __m256i c = _mm256_and_si256(_mm256_srli_epi32(x, 8), byte);
  const __m256i d = _mm256_and_si256(x, byte);
  const __m256i sa = _mm256_i32gather_epi32(s, a, 4);
  const __m256i sb = _mm256_i32gather_epi32(s + 256, b, 4);
  const __m256i sc = _mm256_i32gather_epi32(s + 512, c, 4);
  const __m256i sd = _mm256_i32gather_epi32(s + 768, d, 4);
  return _mm256_add_epi32(_mm256_xor_si256(_mm256_add_epi32(sa, sb), sc), sd);
}

template <int N>
inline __m256i Rotl(__m256i v) {
  return _mm256_or_si256(_mm256_slli_epi32(v, N), _mm256_srli_epi32(v, 32 - N));
}

template <int J>
inline __m256i DesLookup(__m256i r, std::uint8_t k) {
  constexpr int kRot = (4 * J + 31) % 32;
  const __m256i idx = _mm256_xor_si256(_mm256_srli_epi32(Rotl<kRot>(r), 26),
                                       _mm256_set1_epi32(k));
  return _mm256_i32gather_epi32(
      reinterpret_cast<const int*>(des::detail::kSp[J].data()), idx, 4);
}

template <std::size_t... J>
inline __m256i DesF(__m256i r, const std::uint8_t* k,
                    std::index_sequence<J...>) {
  __m256i out = _mm256_setzero_si256();
  ((out = _mm256_or_si256(out, DesLookup<J>(r, k[J]))), ...);
  return out;
}

}  // namespace

void BlowfishAvx2(const std::uint32_t* p, const std::uint32_t* s,
                  const std::uint8_t* in, std::uint8_t* out,
                  std::size_t blocks) {
  const int* sbox = reinterpret_cast<const int*>(s);
  std::size_t done = 0;
  for (; done + 8 <= blocks; done += 8, in += 64, out += 64) {
    __m256i l, r;
    LoadHalves(in, l, r);
    for (int i = 0; i < 16; i += 2) {
      l = _mm256_xor_si256(l, _mm256_set1_epi32(static_cast<int>(p[i])));
      r = _mm256_xor_si256(r, BlowfishF(sbox, l));
      r = _mm256_xor_si256(r, _mm256_set1_epi32(static_cast<int>(p[i + 1])));
      l = _mm256_xor_si256(l, BlowfishF(sbox, r));
    }
    l = _mm256_xor_si256(l, _mm256_set1_epi32(static_cast<int>(p[16])));
    r = _mm256_xor_si256(r, _mm256_set1_epi32(static_cast<int>(p[17])));
    StoreHalves(r, l, out);
  }
  BlowfishScalar(p, s, in, out, blocks - done);
}

void DesAvx2(const std::uint8_t* groups, const std::uint8_t* in,
             std::uint8_t* out, std::size_t blocks) {
  using des::detail::kFpTable;
  using des::detail::kIpTable;
  using des::detail::Permute;
  alignas(32) std::uint32_t lh[8];
  alignas(32) std::uint32_t rh[8];
  std::size_t done = 0;
  for (; done + 8 <= blocks; done += 8, in += 64, out += 64) {
    for (int lane = 0; lane < 8; ++lane) {
      const std::uint64_t x = Permute(kIpTable, LoadBe64(in + 8 * lane));
      lh[lane] = static_cast<std::uint32_t>(x >> 32);
      rh[lane] = static_cast<std::uint32_t>(x);
    }
    __m256i l = _mm256_load_si256(reinterpret_cast<const __m256i*>(lh));
    __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(rh));
    for (int round = 0; round < 16; ++round) {
      const __m256i next = _mm256_xor_si256(
          l, DesF(r, groups + 8 * round, std::make_index_sequence<8>{}));
      l = r;
      r = next;
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lh), l);
    _mm256_store_si256(reinterpret_cast<__m256i*>(rh), r);
    for (int lane = 0; lane < 8; ++lane) {
      const std::uint64_t pre = (std::uint64_t{rh[lane]} << 32) | lh[lane];
      StoreBe64(Permute(kFpTable, pre), out + 8 * lane);
    }
  }
  DesScalar(groups, in, out, blocks - done);
}

}  // namespace cryptvault::kernels
