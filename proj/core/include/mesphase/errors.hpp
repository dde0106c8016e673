// Copyright 2026 The Mesphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mesphase {

/// Base class of every error thrown by the library. `kind()` is a stable
/// machine-readable name ("NotNormalized", "NotClosed", ...) suitable for
/// diagnostics and exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct NotNormalizedError : Error {
  explicit NotNormalizedError(const std::string& msg)
      : Error("NotNormalized", msg) {}
};

struct NotMaximallyEntangledError : Error {
  explicit NotMaximallyEntangledError(const std::string& msg)
      : Error("NotMaximallyEntangled", msg) {}
};

struct UnknownLabelError : Error {
  explicit UnknownLabelError(const std::string& msg)
      : Error("UnknownLabel", msg) {}
};

struct OrthogonalStatesError : Error {
  explicit OrthogonalStatesError(const std::string& msg)
      : Error("OrthogonalStates", msg) {}
};

struct NotClosedError : Error {
  explicit NotClosedError(const std::string& msg) : Error("NotClosed", msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

}  // namespace mesphase
