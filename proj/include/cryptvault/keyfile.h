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

#ifndef CRYPTVAULT_KEYFILE_H_
#define CRYPTVAULT_KEYFILE_H_

#include <string>
#include <string_view>

#include "cryptvault/bytes.h"
#include "cryptvault/paillier.h"
#include "cryptvault/rsa.h"

// Line-oriented key files: a "<kind> v1" header line followed by
// "field=<hex>" lines. Parsing checks the key's invariants and throws
// KeyFileError on any failure.
namespace cryptvault::keyfile {

std::string FormatRsaPublic(const rsa::PublicKey& key);
std::string FormatRsaPrivate(const rsa::KeyPair& key);
std::string FormatPaillierPublic(const paillier::PublicKey& key);
std::string FormatPaillierPrivate(const paillier::PrivateKey& key);
// "blowfish-key v1" / "des-key v1" with a single key= field.
std::string FormatBlowfishKey(ByteSpan key);
std::string FormatDesKey(ByteSpan key);

rsa::PublicKey ParseRsaPublic(std::string_view text);
rsa::KeyPair ParseRsaPrivate(std::string_view text);
paillier::PublicKey ParsePaillierPublic(std::string_view text);
paillier::PrivateKey ParsePaillierPrivate(std::string_view text);
Bytes ParseBlowfishKey(std::string_view text);
Bytes ParseDesKey(std::string_view text);

// First 16 hex characters of SHA-256 over `material`.
std::string Fingerprint(std::string_view material);

}  // namespace cryptvault::keyfile

#endif  // CRYPTVAULT_KEYFILE_H_
