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

#ifndef CRYPTVAULT_VAULT_H_
#define CRYPTVAULT_VAULT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cryptvault/bytes.h"
#include "cryptvault/envelope.h"
#include "cryptvault/paillier.h"
#include "cryptvault/random.h"

namespace cryptvault::vault {

struct Entry {
  std::string name;
  std::vector<Layer> layers;
  std::uint64_t size_bytes = 0;
  std::int64_t created_at = 0;  // seconds since the Unix epoch

  friend bool operator==(const Entry&, const Entry&) = default;
};

inline constexpr int kIndexFormatVersion = 1;

// 1..255 bytes of valid UTF-8 with no path separators, control characters
// or "."/"..". Throws NameValidationError.
void ValidateName(std::string_view name);

// Blob file name for an entry: hex(SHA-256(name)) + ".cvlt".
std::string BlobFileName(std::string_view name);

// A directory standing in for untrusted remote storage:
//   <root>/index.tsv            name, stack, size, created_at per line
//   <root>/blobs/<sha>.cvlt     one serialized envelope per entry
//   <root>/.lock                advisory lock held by mutators
// Readers take no lock; every file is replaced by rename, so a reader sees a
// complete old or new version.
class Vault {
 public:
  using Clock = std::function<std::int64_t()>;

  // Creates the layout when `create` is set and it does not exist yet;
  // otherwise a missing root is an IoError.
  explicit Vault(std::filesystem::path root, bool create = true,
                 Clock clock = nullptr);

  const std::filesystem::path& root() const { return root_; }

  // NameValidationError, NameConflictError (unless overwrite), IoError.
  Entry Put(std::string_view name, const Envelope& env, bool overwrite = false);

  // NotFoundError, CorruptEnvelopeError.
  Envelope Get(std::string_view name) const;

  // Sorted by name.
  std::vector<Entry> List() const;

  // Server-side chunkwise sum of two stored multilevel envelopes, stored as
  // `name_out`. Takes only the transport key and the Paillier public key.
  Entry HomomorphicAdd(std::string_view name_a, std::string_view name_b,
                       std::string_view name_out, ByteSpan blowfish_key,
                       const paillier::PublicKey& pub, RandomSource& rng,
                       bool overwrite = false);

  // Index/blob inconsistencies, one message each; empty when consistent.
  // Leftover *.tmp files from interrupted writes are not problems.
  std::vector<std::string> Fsck() const;

 private:
  std::vector<Entry> ReadIndex() const;
  void WriteIndex(const std::vector<Entry>& entries) const;
  std::filesystem::path BlobPath(std::string_view name) const;

  std::filesystem::path root_;
  Clock clock_;
};

}  // namespace cryptvault::vault

#endif  // CRYPTVAULT_VAULT_H_
