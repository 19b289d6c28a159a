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

#include "cryptvault/cpu.h"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace cryptvault {
namespace {

// -1: automatic, otherwise a Kernel value.
std::atomic<int> g_forced{-1};

bool CpuHasAvx2() {
#if defined(CRYPTVAULT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel Widest() {
  return KernelAvailable(Kernel::kAvx2) ? Kernel::kAvx2 : Kernel::kScalar;
}

Kernel FromEnvironment() {
  const char* env = std::getenv("CRYPTVAULT_KERNEL");
  if (env == nullptr) return Widest();
  const std::string_view name(env);
  if (name == "scalar") return Kernel::kScalar;
  if (name == "avx2" && KernelAvailable(Kernel::kAvx2)) return Kernel::kAvx2;
  return name == "avx2" ? Kernel::kScalar : Widest();
}

}  // namespace

std::string_view KernelName(Kernel k) {
  switch (k) {
    case Kernel::kScalar:
      return "scalar";
    case Kernel::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool KernelAvailable(Kernel k) {
  switch (k) {
    case Kernel::kScalar:
      return true;
    case Kernel::kAvx2: {
      static const bool has = CpuHasAvx2();
      return has;
    }
  }
  return false;
}

std::vector<Kernel> AvailableKernels() {
  std::vector<Kernel> out;
  for (Kernel k : {Kernel::kScalar, Kernel::kAvx2}) {
    if (KernelAvailable(k)) out.push_back(k);
  }
  return out;
}

Kernel ActiveKernel() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) {
    const auto k = static_cast<Kernel>(forced);
    return KernelAvailable(k) ? k : Kernel::kScalar;
  }
  static const Kernel automatic = FromEnvironment();
  return automatic;
}

void ForceKernel(std::optional<Kernel> k) {
  g_forced.store(k ? static_cast<int>(*k) : -1, std::memory_order_relaxed);
}

}  // namespace cryptvault
