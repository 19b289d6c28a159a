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

#include "cryptvault/vault.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <ctime>
#include <set>

#include "cryptvault/errors.h"
#include "cryptvault/io.h"
#include "cryptvault/sha256.h"

namespace cryptvault::vault {
namespace fs = std::filesystem;
namespace {

constexpr std::string_view kIndexHeader = "# cryptvault-index\tv1";
constexpr std::string_view kBlobSuffix = ".cvlt";

// Exclusive flock on <root>/.lock for the lifetime of the object.
class WriteLock {
 public:
  explicit WriteLock(const fs::path& root) {
    const fs::path path = root / ".lock";
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) {
      throw IoError("cannot open lock " + path.string() + ": " +
                    std::strerror(errno));
    }
    while (::flock(fd_, LOCK_EX) != 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd_);
      throw IoError("cannot lock " + path.string() + ": " + std::strerror(err));
    }
  }
  ~WriteLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  WriteLock(const WriteLock&) = delete;
  WriteLock& operator=(const WriteLock&) = delete;

 private:
  int fd_ = -1;
};

// Length of the UTF-8 sequence starting at s[i], or 0 if invalid.
std::size_t Utf8SequenceLength(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  std::size_t len;
  std::uint32_t cp;
  if (c < 0x80) return 1;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (cc & 0x3F);
  }
  static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  return len;
}

template <typename T>
T ParseNumber(std::string_view text, std::size_t line) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw IoError("index.tsv line " + std::to_string(line) +
                  ": bad number '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t SystemClock() { return static_cast<std::int64_t>(std::time(nullptr)); }

}  // namespace

void ValidateName(std::string_view name) {
  if (name.empty() || name.size() > 255) {
    throw NameValidationError("name must be 1..255 bytes, got " +
                              std::to_string(name.size()));
  }
  if (name == "." || name == "..") {
    throw NameValidationError("name may not be '.' or '..'");
  }
  for (std::size_t i = 0; i < name.size();) {
    const auto c = static_cast<unsigned char>(name[i]);
    if (c == '/' || c == '\\') {
      throw NameValidationError("name may not contain path separators");
    }
    if (c < 0x20 || c == 0x7F) {
      throw NameValidationError("name may not contain control characters");
    }
    const std::size_t len = Utf8SequenceLength(name, i);
    if (len == 0) throw NameValidationError("name is not valid UTF-8");
    i += len;
  }
}

std::string BlobFileName(std::string_view name) {
  return ToHex(Sha256(AsBytes(name))) + std::string(kBlobSuffix);
}

Vault::Vault(fs::path root, bool create, Clock clock)
    : root_(std::move(root)), clock_(clock ? std::move(clock) : SystemClock) {
  std::error_code ec;
  if (create) {
    fs::create_directories(root_ / "blobs", ec);
    if (ec) {
      throw IoError("cannot create vault " + root_.string() + ": " +
                    ec.message());
    }
    if (!fs::exists(root_ / "index.tsv")) {
      WriteLock lock(root_);
      if (!fs::exists(root_ / "index.tsv")) WriteIndex({});
    }
  } else if (!fs::is_directory(root_ / "blobs", ec) ||
             !fs::exists(root_ / "index.tsv", ec)) {
    throw IoError("no vault at " + root_.string());
  }
}

fs::path Vault::BlobPath(std::string_view name) const {
  return root_ / "blobs" / BlobFileName(name);
}

std::vector<Entry> Vault::ReadIndex() const {
  const std::string text = io::ReadTextFile(root_ / "index.tsv");
  std::vector<Entry> entries;
  std::string_view rest(text);
  std::size_t line_no = 0;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    const std::string_view line = rest.substr(0, nl);
    rest.remove_prefix(nl == std::string_view::npos ? rest.size() : nl + 1);
    ++line_no;
    if (line_no == 1) {
      if (line != kIndexHeader) throw IoError("index.tsv: unknown format");
      continue;
    }
    if (line.empty()) continue;
    std::string_view fields[4];
    std::string_view cur = line;
    for (int i = 0; i < 4; ++i) {
      const std::size_t tab = cur.find('\t');
      if ((i < 3) == (tab == std::string_view::npos)) {
        throw IoError("index.tsv line " + std::to_string(line_no) +
                      ": expected 4 fields");
      }
      fields[i] = cur.substr(0, tab);
      if (i < 3) cur.remove_prefix(tab + 1);
    }
    Entry e;
    e.name = std::string(fields[0]);
    try {
      e.layers = ParseStack(fields[1]);
    } catch (const ParseError& err) {
      throw IoError("index.tsv line " + std::to_string(line_no) + ": " +
                    err.what());
    }
    e.size_bytes = ParseNumber<std::uint64_t>(fields[2], line_no);
    e.created_at = ParseNumber<std::int64_t>(fields[3], line_no);
    entries.push_back(std::move(e));
  }
  if (line_no == 0) throw IoError("index.tsv: empty file");
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.name < b.name; });
  return entries;
}

void Vault::WriteIndex(const std::vector<Entry>& entries) const {
  std::string text(kIndexHeader);
  text += '\n';
  for (const Entry& e : entries) {
    text += e.name;
    text += '\t';
    text += FormatStack(e.layers);
    text += '\t';
    text += std::to_string(e.size_bytes);
    text += '\t';
    text += std::to_string(e.created_at);
    text += '\n';
  }
  io::WriteFileAtomic(root_ / "index.tsv", AsBytes(text));
}

Entry Vault::Put(std::string_view name, const Envelope& env, bool overwrite) {
  ValidateName(name);
  const Bytes blob = Serialize(env);

  WriteLock lock(root_);
  std::vector<Entry> entries = ReadIndex();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const Entry& e) { return e.name == name; });
  if (it != entries.end() && !overwrite) {
    throw NameConflictError("entry '" + std::string(name) + "' already exists");
  }
  Entry entry{std::string(name), env.layers, blob.size(), clock_()};
  io::WriteFileAtomic(BlobPath(name), blob);
  if (it != entries.end()) {
    *it = entry;
  } else {
    entries.push_back(entry);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.name < b.name; });
  }
  WriteIndex(entries);
  return entry;
}

Envelope Vault::Get(std::string_view name) const {
  const std::vector<Entry> entries = ReadIndex();
  const bool present = std::any_of(entries.begin(), entries.end(),
                                   [&](const Entry& e) { return e.name == name; });
  if (!present) throw NotFoundError("no entry named '" + std::string(name) + "'");
  Bytes blob;
  try {
    blob = io::ReadFile(BlobPath(name));
  } catch (const IoError& e) {
    throw CorruptEnvelopeError(std::string("blob unreadable: ") + e.what());
  }
  return Parse(blob);
}

std::vector<Entry> Vault::List() const { return ReadIndex(); }

Entry Vault::HomomorphicAdd(std::string_view name_a, std::string_view name_b,
                            std::string_view name_out, ByteSpan blowfish_key,
                            const paillier::PublicKey& pub, RandomSource& rng,
                            bool overwrite) {
  ValidateName(name_out);
  const Envelope a = Get(name_a);
  const Envelope b = Get(name_b);
  return Put(name_out,
             cryptvault::HomomorphicAdd(a, b, pub, blowfish_key, rng),
             overwrite);
}

std::vector<std::string> Vault::Fsck() const {
  std::vector<std::string> problems;
  std::set<std::string> expected;
  for (const Entry& e : ReadIndex()) {
    const std::string file = BlobFileName(e.name);
    expected.insert(file);
    const fs::path path = root_ / "blobs" / file;
    std::error_code ec;
    const auto size = fs::file_size(path, ec);
    if (ec) {
      problems.push_back("'" + e.name + "': blob " + file + " missing");
      continue;
    }
    if (size != e.size_bytes) {
      problems.push_back("'" + e.name + "': blob is " + std::to_string(size) +
                         " bytes, index says " + std::to_string(e.size_bytes));
      continue;
    }
    try {
      if (Parse(io::ReadFile(path)).layers != e.layers) {
        problems.push_back("'" + e.name + "': layer stack differs from index");
      }
    } catch (const Error& err) {
      problems.push_back("'" + e.name + "': " + err.what());
    }
  }
  for (const auto& dirent : fs::directory_iterator(root_ / "blobs")) {
    const std::string file = dirent.path().filename().string();
    if (!file.ends_with(kBlobSuffix)) continue;
    if (!expected.count(file)) {
      problems.push_back("blob " + file + " has no index entry");
    }
  }
  return problems;
}

}  // namespace cryptvault::vault
