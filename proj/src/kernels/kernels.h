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

// Multi-block ECB kernels. Every variant implements the same contract as
// its *Scalar reference: `blocks` 8-byte big-endian blocks from `in` to
// `out` (which may alias). Direction is chosen by the caller through the
// subkey order it passes in.

#ifndef CRYPTVAULT_SRC_KERNELS_KERNELS_H_
#define CRYPTVAULT_SRC_KERNELS_KERNELS_H_

#include <cstddef>
#include <cstdint>

namespace cryptvault::kernels {

// p: 18 subkeys in application order. s: S0..S3 back to back.
using BlowfishFn = void (*)(const std::uint32_t* p, const std::uint32_t* s,
                            const std::uint8_t* in, std::uint8_t* out,
                            std::size_t blocks);

// groups: 16 rounds x 8 six-bit S-box subkey groups in application order.
using DesFn = void (*)(const std::uint8_t* groups, const std::uint8_t* in,
                       std::uint8_t* out, std::size_t blocks);

void BlowfishScalar(const std::uint32_t* p, const std::uint32_t* s,
                    const std::uint8_t* in, std::uint8_t* out,
                    std::size_t blocks);
void DesScalar(const std::uint8_t* groups, const std::uint8_t* in,
               std::uint8_t* out, std::size_t blocks);

#if defined(CRYPTVAULT_HAVE_AVX2)
void BlowfishAvx2(const std::uint32_t* p, const std::uint32_t* s,
                  const std::uint8_t* in, std::uint8_t* out,
                  std::size_t blocks);
void DesAvx2(const std::uint8_t* groups, const std::uint8_t* in,
             std::uint8_t* out, std::size_t blocks);
#endif

}  // namespace cryptvault::kernels

#endif  // CRYPTVAULT_SRC_KERNELS_KERNELS_H_
