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

#include "cryptvault/des.h"

#include <string>

#include "cryptvault/errors.h"
#include "des_tables.h"
#include "kernels/kernels.h"
#include "kernels/rounds.h"

namespace cryptvault::des {
namespace {

kernels::DesFn Select(Kernel kernel) {
  switch (kernel) {
    case Kernel::kScalar:
      return kernels::DesScalar;
    case Kernel::kAvx2:
#if defined(CRYPTVAULT_HAVE_AVX2)
      if (KernelAvailable(Kernel::kAvx2)) return kernels::DesAvx2;
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

std::uint64_t Rounds(const std::uint8_t* groups, std::uint64_t block) {
  using detail::kFpTable;
  using detail::kIpTable;
  using detail::Permute;
  return Permute(kFpTable, kernels::DesRounds(groups, Permute(kIpTable, block)));
}

std::uint64_t CheckedBlock(ByteSpan block) {
  if (block.size() != kBlockSize) {
    throw BlockLengthError("DES block must be 8 bytes, got " +
                           std::to_string(block.size()));
  }
  return LoadBe64(block.data());
}

Block ToBlock(std::uint64_t v) {
  Block out;
  StoreBe64(v, out.data());
  return out;
}

std::uint32_t Rotl28(std::uint32_t v, int n) {
  return ((v << n) | (v >> (28 - n))) & 0x0FFFFFFF;
}

}  // namespace

KeySchedule ExpandKey(ByteSpan key) {
  if (key.size() != kKeySize) {
    throw KeyLengthError("DES key must be 8 bytes, got " +
                         std::to_string(key.size()));
  }
  const std::uint64_t k = LoadBe64(key.data());

  std::uint64_t cd = 0;
  for (std::uint8_t bit : detail::kPc1) {
    cd = (cd << 1) | ((k >> (64 - bit)) & 1);
  }
  std::uint32_t c = static_cast<std::uint32_t>(cd >> 28);
  std::uint32_t d = static_cast<std::uint32_t>(cd & 0x0FFFFFFF);

  KeySchedule ks;
  for (std::size_t round = 0; round < kRounds; ++round) {
    c = Rotl28(c, detail::kShifts[round]);
    d = Rotl28(d, detail::kShifts[round]);
    const std::uint64_t joined = (std::uint64_t{c} << 28) | d;
    std::uint64_t sub = 0;
    for (std::uint8_t bit : detail::kPc2) {
      sub = (sub << 1) | ((joined >> (56 - bit)) & 1);
    }
    ks.subkeys_[round] = sub;
  }
  for (std::size_t round = 0; round < kRounds; ++round) {
    for (int j = 0; j < 8; ++j) {
      ks.encrypt_groups_[8 * round + j] =
          static_cast<std::uint8_t>((ks.subkeys_[round] >> (42 - 6 * j)) & 63);
      ks.decrypt_groups_[8 * (kRounds - 1 - round) + j] =
          ks.encrypt_groups_[8 * round + j];
    }
  }
  return ks;
}

std::uint64_t EncryptBlock(const KeySchedule& ks, std::uint64_t block) {
  return Rounds(ks.encrypt_groups().data(), block);
}

std::uint64_t DecryptBlock(const KeySchedule& ks, std::uint64_t block) {
  return Rounds(ks.decrypt_groups().data(), block);
}

Block EncryptBlock(const KeySchedule& ks, ByteSpan block) {
  return ToBlock(EncryptBlock(ks, CheckedBlock(block)));
}

Block DecryptBlock(const KeySchedule& ks, ByteSpan block) {
  return ToBlock(DecryptBlock(ks, CheckedBlock(block)));
}

void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel) {
  CheckSpans(in, out);
  Select(kernel)(ks.encrypt_groups().data(), in.data(), out.data(),
                 in.size() / kBlockSize);
}

void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out,
                   Kernel kernel) {
  CheckSpans(in, out);
  Select(kernel)(ks.decrypt_groups().data(), in.data(), out.data(),
                 in.size() / kBlockSize);
}

void EncryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out) {
  EncryptBlocks(ks, in, out, ActiveKernel());
}

void DecryptBlocks(const KeySchedule& ks, ByteSpan in, MutableByteSpan out) {
  DecryptBlocks(ks, in, out, ActiveKernel());
}

}  // namespace cryptvault::des
