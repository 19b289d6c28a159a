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

#include "cryptvault/modes.h"

namespace cryptvault {

Bytes Pkcs7Pad(ByteSpan data, std::size_t block) {
  if (block == 0 || block > 255) {
    throw InvalidArgumentError("PKCS#7 block size must be 1..255");
  }
  const std::size_t k = block - data.size() % block;
  Bytes out(data.begin(), data.end());
  out.insert(out.end(), k, static_cast<std::uint8_t>(k));
  return out;
}

Bytes Pkcs7Unpad(ByteSpan data, std::size_t block) {
  if (data.empty() || data.size() % block != 0) {
    throw PaddingError("padded length " + std::to_string(data.size()) +
                       " is not a positive multiple of the block size");
  }
  const std::size_t k = data.back();
  if (k == 0 || k > block) {
    throw PaddingError("invalid padding byte " + std::to_string(k));
  }
  for (std::size_t i = data.size() - k; i < data.size(); ++i) {
    if (data[i] != k) throw PaddingError("inconsistent padding trailer");
  }
  return Bytes(data.begin(), data.end() - static_cast<std::ptrdiff_t>(k));
}

}  // namespace cryptvault
