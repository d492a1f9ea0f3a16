// Copyright 2026 The MMVC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mmvc {

// All library failures surface as mmvc::Error. Verification rejects are
// values, not errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the wire layer for malformed bytes and framing problems, so that
// callers can map them to a protocol/IO failure.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmvc

#define MMVC_ENFORCE(cond, msg)       \
  do {                                \
    if (!(cond)) {                    \
      throw ::mmvc::Error(msg);       \
    }                                 \
  } while (false)
