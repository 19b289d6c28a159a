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

#ifndef CRYPTVAULT_ERRORS_H_
#define CRYPTVAULT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cryptvault {

// Every failure raised by the library carries one of these codes. The CLI
// maps them to a stable one-word category in its diagnostics.
enum class ErrorCode {
  kKeyLength,
  kBlockLength,
  kMessageRange,
  kCiphertextRange,
  kRandomness,
  kPrimeGeneration,
  kInvalidArgument,
  kPadding,
  kIntegrity,
  kLayerStack,
  kKeyRange,
  kKeyMismatch,
  kChunkOverflow,
  kCorruptEnvelope,
  kKeyFile,
  kNameConflict,
  kNameValidation,
  kNotFound,
  kIo,
  kStackMismatch,
  kChunkMismatch,
  kParse,
  kZeroModulus,
};

// Short human-readable category, e.g. "integrity" or "layer stack".
std::string_view ErrorCategory(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode C>
class CodedError : public Error {
 public:
  explicit CodedError(const std::string& what) : Error(C, what) {}
};

using KeyLengthError = CodedError<ErrorCode::kKeyLength>;
using BlockLengthError = CodedError<ErrorCode::kBlockLength>;
using MessageRangeError = CodedError<ErrorCode::kMessageRange>;
using CiphertextRangeError = CodedError<ErrorCode::kCiphertextRange>;
using RandomnessError = CodedError<ErrorCode::kRandomness>;
using PrimeGenerationError = CodedError<ErrorCode::kPrimeGeneration>;
using InvalidArgumentError = CodedError<ErrorCode::kInvalidArgument>;
using PaddingError = CodedError<ErrorCode::kPadding>;
using IntegrityError = CodedError<ErrorCode::kIntegrity>;
using LayerStackError = CodedError<ErrorCode::kLayerStack>;
using KeyRangeError = CodedError<ErrorCode::kKeyRange>;
using KeyMismatchError = CodedError<ErrorCode::kKeyMismatch>;
using ChunkOverflowError = CodedError<ErrorCode::kChunkOverflow>;
using CorruptEnvelopeError = CodedError<ErrorCode::kCorruptEnvelope>;
using KeyFileError = CodedError<ErrorCode::kKeyFile>;
using NameConflictError = CodedError<ErrorCode::kNameConflict>;
using NameValidationError = CodedError<ErrorCode::kNameValidation>;
using NotFoundError = CodedError<ErrorCode::kNotFound>;
using IoError = CodedError<ErrorCode::kIo>;
using StackMismatchError = CodedError<ErrorCode::kStackMismatch>;
using ChunkMismatchError = CodedError<ErrorCode::kChunkMismatch>;
using ParseError = CodedError<ErrorCode::kParse>;
using ZeroModulusError = CodedError<ErrorCode::kZeroModulus>;

}  // namespace cryptvault

#endif  // CRYPTVAULT_ERRORS_H_
