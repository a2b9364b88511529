// Copyright 2026 The deplen Authors
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

#ifndef DEPLEN_ERROR_HPP_
#define DEPLEN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace deplen {

// Every failure raised by the library carries one of these codes. The values
// are mirrored one-to-one by dl_status in the C API.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse,
  kCycle,
  kMultiRoot,
  kDisconnected,
  kUnknownEdge,
  kDomain,
  kNonMonotone,
  kSizeMismatch,
  kTooLarge,
  kInfeasibleConstraints,
  kEmptyCorpus,
  kRange,
  kIo,
  kOverflow,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures remember the 1-based input line they refer to (0 if none).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParse,
              line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace deplen

#endif  // DEPLEN_ERROR_HPP_
