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

#ifndef CRYPTVAULT_SRC_BLOWFISH_TABLES_H_
#define CRYPTVAULT_SRC_BLOWFISH_TABLES_H_

#include <array>
#include <cstdint>

namespace cryptvault::blowfish::detail {

// Fractional hexadecimal digits of pi, consumed in order: P1..P18, then
// S0[0]..S3[255].
extern const std::array<std::uint32_t, 18> kInitialP;
extern const std::array<std::uint32_t, 256> kInitialS0;
extern const std::array<std::uint32_t, 256> kInitialS1;
extern const std::array<std::uint32_t, 256> kInitialS2;
extern const std::array<std::uint32_t, 256> kInitialS3;

}  // namespace cryptvault::blowfish::detail

#endif  // CRYPTVAULT_SRC_BLOWFISH_TABLES_H_
