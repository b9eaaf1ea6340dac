// Copyright 2026 The bondauction Authors.
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

#pragma once

#include <span>
#include <stdexcept>
#include <string>

namespace bondauction {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDomain = 2,     // parameters outside a formula's domain
  kParse = 3,
  kIo = 4,
  kUnsupported = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Correctly rounded sum of the inputs (Shewchuk's partials algorithm).
// Ten copies of 0.1 sum to exactly 1.0.
double exact_sum(std::span<const double> values);

// "%.17g" formatting; round-trips every finite double.
std::string format_double(double value);

}  // namespace bondauction
