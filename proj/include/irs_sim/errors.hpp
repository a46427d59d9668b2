// Copyright 2026 The irs-sim Authors
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

#include <stdexcept>
#include <string>

namespace irs {

// Configuration or parameter outside its admissible range. `key()` names the
// offending field when one is known.
class InvalidConfig : public std::invalid_argument {
 public:
  explicit InvalidConfig(const std::string& message, std::string key = {})
      : std::invalid_argument(message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that must be inverted is singular or not positive definite.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The beamforming direction is undefined for a zero channel.
class ZeroChannel : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A capacity or efficiency limit diverges for the given impairment levels.
class UnboundedCapacity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace irs
