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

#ifndef CRYPTVAULT_SHA256_H_
#define CRYPTVAULT_SHA256_H_

#include <array>
#include <cstdint>

#include "cryptvault/bytes.h"

namespace cryptvault {

using Digest = std::array<std::uint8_t, 32>;

Digest Sha256(ByteSpan data);

}  // namespace cryptvault

#endif  // CRYPTVAULT_SHA256_H_
