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

#include "cryptvault/blowfish.h"

#include <algorithm>
#include <string>

#include "blowfish_tables.h"
#include "cryptvault/errors.h"
#include "kernels/kernels.h"
#include "kernels/rounds.h"

namespace cryptvault::blowfish {
namespace {

kernels::BlowfishFn Select(Kernel kernel) {
  switch (kernel) {
    case Kernel::kScalar:
      return kernels::BlowfishScalar;
    case Kernel::kAvx2:
#if defined(CRYPTVAULT_HAVE_AVX2)
      if (KernelAvailable(Kernel::kAvx2)) return kernels::BlowfishAvx2;
#endif
      break;
  }
  throw InvalidArgumentError("kernel " + std::string(KernelName(kernel)) +
                             " is not available");
}

void CheckSpans(ByteSpan in, MutableByteSpan out) {
  if (in.size() % kBlockSize != 0 || in.size() != out.size()) {
    throw BlockLengthError("ECB input of " + std::to_string(in.size()) +
                           " bytes is not a whole number of blocks");
  }
}

}  // namespace

KeySchedule ExpandKey(ByteSpan key) {
  if (key.size() < kMinKeyBytes || key.size() > kMaxKeyBytes) {
    throw KeyLengthError("Blowfish key must be 4..56 bytes, got " +
                         std::to_string(key.size()));
  }
  KeySchedule ks;
  std::copy(detail::kInitialP.begin(), detail::kInitialP.end(), ks.p_.begin());
  auto s = ks.s_.begin();
  for (const auto* box : {&detail::kInitialS0, &detail::kInitialS1,
                          &detail::kInitialS2, &detail::kInitialS3}) {
    s = std::copy(box->begin(), box->end(), s);
  }

  std::size_t pos = 0;
  for (auto& word : ks.p_) {
    std::uint32_t k = 0;
    for (int i = 0; i < 4; ++i) {
      k = (k << 8) | key[pos];
      pos = (pos + 1) % key.size();
    }
    word ^= k;
  }

  // 9 P-array pairs + 512 S-box pairs = 521 encryptions of a running block.
  std::uint32_t l = 0;
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < ks.p_.size(); i += 2) {
    kernels::BlowfishRounds(ks.p_.data(), ks.s_.data(), l, r);
    ks.p_[i] = l;
    ks.p_[i + 1] = r;
  }
  for (std::size_t i = 0; i < ks.s_.size(); i += 2) {
    kernels::BlowfishRounds(ks.p_.data(), ks.s_.data(), l, r);
    ks.s_[i] = l;
    ks.s_[i + 1] = r;
  }

  std::reverse_copy(ks.p_.begin(), ks.p_.end(), ks.p_reversed_.begin());
  return ks;
}

std::uint32_t FFunction(const KeySchedule& ks, std::uint32_t x) {
  return kernels::BlowfishF(ks.s_boxes().data(), x);
}

Block64 EncryptBlock(const KeySchedule& ks, Block64 b) {
  kernels::BlowfishRounds(ks.p_array().data(), ks.s_boxes().data(), b.left,
                          b.right);
  return b;
}

Block64 DecryptBlock(const KeySchedule& ks, Block64 b) {
  kernels::BlowfishRounds(ks.p_array_reversed().data(), ks.s_boxes().data(),
                          b.left, b.right);
  return b;
}

void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel) {
  CheckSpans(in, out);
  Select(kernel)(ks.p_array().data(), ks.s_boxes().data(), in.data(),
                 out.data(), in.size() / kBlockSize);
}

void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel) {
  CheckSpans(in, out);
  Select(kernel)(ks.p_array_reversed().data(), ks.s_boxes().data(), in.data(),
                 out.data(), in.size() / kBlockSize);
}

void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out) {
  EncryptBlocks(ks, in, out, ActiveKernel());
}

void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out) {
  DecryptBlocks(ks, in, out, ActiveKernel());
}

}  // namespace cryptvault::blowfish
