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

#ifndef CRYPTVAULT_IO_H_
#define CRYPTVAULT_IO_H_

#include <filesystem>
#include <string>

#include "cryptvault/bytes.h"

namespace cryptvault::io {

// IoError on failure.
Bytes ReadFile(const std::filesystem::path& path);
std::string ReadTextFile(const std::filesystem::path& path);

// Writes `<path>.tmp`, fsyncs it, then renames it over `path`, so readers
// see either the old file or the complete new one.
void WriteFileAtomic(const std::filesystem::path& path, ByteSpan data);

}  // namespace cryptvault::io

#endif  // CRYPTVAULT_IO_H_
