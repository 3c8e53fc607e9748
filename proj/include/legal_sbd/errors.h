// Copyright 2026 The Legal SBD Authors.
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

#ifndef LEGAL_SBD_ERRORS_H_
#define LEGAL_SBD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace legal_sbd {

// Bad input data: malformed files, invariant violations in documents or
// models. Command-line tools map this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model file written by an incompatible format version.
class VersionError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace legal_sbd

#endif  // LEGAL_SBD_ERRORS_H_
