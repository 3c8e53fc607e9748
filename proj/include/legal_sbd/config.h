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

#ifndef LEGAL_SBD_CONFIG_H_
#define LEGAL_SBD_CONFIG_H_

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace legal_sbd {

// Invalid configuration or command-line usage (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat "key = value" lines. Blank lines and lines starting with '#' are
// ignored; keys may be written with or without leading dashes. Duplicate keys
// and lines without '=' are errors.
std::map<std::string, std::string> parse_flat_config(std::istream& in);
std::map<std::string, std::string> load_flat_config(const std::string& path);

}  // namespace legal_sbd

#endif  // LEGAL_SBD_CONFIG_H_
