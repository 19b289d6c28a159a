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

#include "cryptvault/errors.h"

namespace cryptvault {

std::string_view ErrorCategory(ErrorCode code) {
  switch (code) {
    case ErrorCode::kKeyLength:
      return "key length";
    case ErrorCode::kBlockLength:
      return "block length";
    case ErrorCode::kMessageRange:
      return "message range";
    case ErrorCode::kCiphertextRange:
      return "ciphertext range";
    case ErrorCode::kRandomness:
      return "randomness";
    case ErrorCode::kPrimeGeneration:
      return "prime generation";
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kPadding:
      return "padding";
    case ErrorCode::kIntegrity:
      return "integrity";
    case ErrorCode::kLayerStack:
      return "layer stack";
    case ErrorCode::kKeyRange:
      return "key range";
    case ErrorCode::kKeyMismatch:
      return "key mismatch";
    case ErrorCode::kChunkOverflow:
      return "chunk overflow";
    case ErrorCode::kCorruptEnvelope:
      return "corrupt envelope";
    case ErrorCode::kKeyFile:
      return "key file";
    case ErrorCode::kNameConflict:
      return "name conflict";
    case ErrorCode::kNameValidation:
      return "invalid name";
    case ErrorCode::kNotFound:
      return "not found";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kStackMismatch:
      return "stack mismatch";
    case ErrorCode::kChunkMismatch:
      return "chunk mismatch";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kZeroModulus:
      return "zero modulus";
  }
  return "error";
}

}  // namespace cryptvault
