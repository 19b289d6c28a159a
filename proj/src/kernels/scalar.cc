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

#include "kernels/kernels.h"
#include "kernels/rounds.h"

#include "cryptvault/bytes.h"
#include "des_tables.h"

namespace cryptvault::kernels {

void BlowfishScalar(const std::uint32_t* p, const std::uint32_t* s,
                    const std::uint8_t* in, std::uint8_t* out,
                    std::size_t blocks) {
  for (std::size_t i = 0; i < blocks; ++i, in += 8, out += 8) {
    std::uint32_t l = LoadBe32(in);
    std::uint32_t r = LoadBe32(in + 4);
    BlowfishRounds(p, s, l, r);
    StoreBe32(l, out);
    StoreBe32(r, out + 4);
  }
}

void DesScalar(const std::uint8_t* groups, const std::uint8_t* in,
               std::uint8_t* out, std::size_t blocks) {
  using des::detail::kFpTable;
  using des::detail::kIpTable;
  using des::detail::Permute;
  for (std::size_t i = 0; i < blocks; ++i, in += 8, out += 8) {
    const std::uint64_t x = Permute(kIpTable, LoadBe64(in));
    StoreBe64(Permute(kFpTable, DesRounds(groups, x)), out);
  }
}

}  // namespace cryptvault::kernels
