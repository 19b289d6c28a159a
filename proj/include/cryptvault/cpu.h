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

#ifndef CRYPTVAULT_CPU_H_
#define CRYPTVAULT_CPU_H_

#include <optional>
#include <string_view>
#include <vector>

namespace cryptvault {

// Multi-block ECB kernels. kScalar is the reference; wider kernels must
// agree with it bit for bit.
enum class Kernel {
  kScalar,
  kAvx2,
};

std::string_view KernelName(Kernel k);

// Compiled in and supported by the running CPU.
bool KernelAvailable(Kernel k);
std::vector<Kernel> AvailableKernels();

// Widest available kernel, unless overridden by ForceKernel() or by the
// CRYPTVAULT_KERNEL environment variable ("scalar" or "avx2"). Forcing an
// unavailable kernel falls back to kScalar.
Kernel ActiveKernel();

// Process-wide override; std::nullopt restores automatic selection.
void ForceKernel(std::optional<Kernel> k);

}  // namespace cryptvault

#endif  // CRYPTVAULT_CPU_H_
