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

#include "cryptvault/keyfile.h"

#include <map>
#include <string>
#include <vector>

#include "cryptvault/bigint.h"
#include "cryptvault/errors.h"
#include "cryptvault/random.h"
#include "cryptvault/sha256.h"

namespace cryptvault::keyfile {
namespace {

using Fields = std::map<std::string, std::string, std::less<>>;

std::string Format(std::string_view header,
                   const std::vector<std::pair<std::string_view, std::string>>&
                       fields) {
  std::string out(header);
  out += '\n';
  for (const auto& [name, value] : fields) {
    out.append(name);
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

// Header must match exactly; every field in `required` must appear once and
// nothing else may.
Fields ParseFields(std::string_view text, std::string_view header,
                   std::initializer_list<std::string_view> required) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty() || lines.front() != header) {
    throw KeyFileError("expected header '" + std::string(header) + "'");
  }
  Fields fields;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t eq = lines[i].find('=');
    if (eq == std::string_view::npos) {
      throw KeyFileError("line " + std::to_string(i + 1) + ": missing '='");
    }
    std::string name(lines[i].substr(0, eq));
    bool known = false;
    for (std::string_view r : required) known = known || r == name;
    if (!known) throw KeyFileError("unknown field '" + name + "'");
    if (!fields.emplace(name, std::string(lines[i].substr(eq + 1))).second) {
      throw KeyFileError("duplicate field '" + name + "'");
    }
  }
  for (std::string_view r : required) {
    if (fields.find(r) == fields.end()) {
      throw KeyFileError("missing field '" + std::string(r) + "'");
    }
  }
  return fields;
}

BigInt Int(const Fields& f, std::string_view name) {
  try {
    return FromHexString(f.find(name)->second);
  } catch (const ParseError& e) {
    throw KeyFileError("field '" + std::string(name) + "': " + e.what());
  }
}

Bytes Raw(const Fields& f, std::string_view name) {
  try {
    return FromHex(f.find(name)->second);
  } catch (const ParseError& e) {
    throw KeyFileError("field '" + std::string(name) + "': " + e.what());
  }
}

template <typename Fn>
void Checked(Fn&& validate) {
  try {
    validate();
  } catch (const Error& e) {
    throw KeyFileError(std::string("invariant violated: ") + e.what());
  }
}

}  // namespace

std::string FormatRsaPublic(const rsa::PublicKey& key) {
  return Format("rsa-public v1",
                {{"n", ToHexString(key.n)}, {"e", ToHexString(key.e)}});
}

std::string FormatRsaPrivate(const rsa::KeyPair& key) {
  return Format("rsa-private v1", {{"n", ToHexString(key.n)},
                                   {"e", ToHexString(key.e)},
                                   {"d", ToHexString(key.d)},
                                   {"p", ToHexString(key.p)},
                                   {"q", ToHexString(key.q)}});
}

std::string FormatPaillierPublic(const paillier::PublicKey& key) {
  return Format("paillier-public v1", {{"n", ToHexString(key.n())}});
}

std::string FormatPaillierPrivate(const paillier::PrivateKey& key) {
  return Format("paillier-private v1", {{"n", ToHexString(key.pub.n())},
                                        {"lambda", ToHexString(key.lambda)},
                                        {"mu", ToHexString(key.mu)}});
}

std::string FormatBlowfishKey(ByteSpan key) {
  return Format("blowfish-key v1", {{"key", ToHex(key)}});
}

std::string FormatDesKey(ByteSpan key) {
  return Format("des-key v1", {{"key", ToHex(key)}});
}

rsa::PublicKey ParseRsaPublic(std::string_view text) {
  const Fields f = ParseFields(text, "rsa-public v1", {"n", "e"});
  rsa::PublicKey key{Int(f, "n"), Int(f, "e")};
  Checked([&] { rsa::Validate(key); });
  return key;
}

rsa::KeyPair ParseRsaPrivate(std::string_view text) {
  const Fields f =
      ParseFields(text, "rsa-private v1", {"n", "e", "d", "p", "q"});
  rsa::KeyPair key{Int(f, "n"), Int(f, "e"), Int(f, "d"), Int(f, "p"),
                   Int(f, "q")};
  // Primality bases need not be secret; a fixed stream keeps loads
  // reproducible.
  SeededRandom rng(0x6b657966696c65ULL);
  Checked([&] { rsa::Validate(key, rng); });
  return key;
}

paillier::PublicKey ParsePaillierPublic(std::string_view text) {
  const Fields f = ParseFields(text, "paillier-public v1", {"n"});
  paillier::PublicKey key(Int(f, "n"));
  Checked([&] { paillier::Validate(key); });
  return key;
}

paillier::PrivateKey ParsePaillierPrivate(std::string_view text) {
  const Fields f =
      ParseFields(text, "paillier-private v1", {"n", "lambda", "mu"});
  paillier::PrivateKey key{paillier::PublicKey(Int(f, "n")), Int(f, "lambda"),
                           Int(f, "mu"), std::nullopt};
  Checked([&] { paillier::Validate(key); });
  paillier::EnableCrt(key);
  return key;
}

Bytes ParseBlowfishKey(std::string_view text) {
  const Fields f = ParseFields(text, "blowfish-key v1", {"key"});
  Bytes key = Raw(f, "key");
  if (key.size() < 4 || key.size() > 56) {
    throw KeyFileError("Blowfish key must be 4..56 bytes");
  }
  return key;
}

Bytes ParseDesKey(std::string_view text) {
  const Fields f = ParseFields(text, "des-key v1", {"key"});
  Bytes key = Raw(f, "key");
  if (key.size() != 8) throw KeyFileError("DES key must be 8 bytes");
  return key;
}

std::string Fingerprint(std::string_view material) {
  const Digest d = Sha256(AsBytes(material));
  return ToHex(d).substr(0, 16);
}

}  // namespace cryptvault::keyfile
