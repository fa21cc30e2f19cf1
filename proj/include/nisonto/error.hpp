// Copyright 2026 The nisonto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NISONTO_ERROR_HPP_
#define NISONTO_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace nisonto {

enum class ErrorCode {
  kNoArticlesFound,
  kMalformedHeading,
  kDuplicateItem,
  kNoVerbFound,
  kUnextractable,
  kEmptyTail,
  kDuplicateRow,
  kUnknownEntity,
  kEmptyPredicate,
  kEmptyObjectName,
  kEmptyMeasures,
  kCyclicBlankNodes,
  kSyntaxError,
  kUnknownClass,
  kUnknownIndividual,
  kInvalidAbox,
  kInvalidInput,
  kStageInputMissing,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library. The code lets callers branch without
// parsing messages; the message carries source coordinates when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nisonto

#endif  // NISONTO_ERROR_HPP_
