// Copyright 2026 The qtp authors
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

namespace qtp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUnitary : Error {
  using Error::Error;
};
struct NonRotation : Error {
  using Error::Error;
};
struct NotCommuting : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotUnitTrace : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct InvalidState : Error {
  using Error::Error;
};
struct SingularCorrelation : Error {
  using Error::Error;
};
struct NegativeProbability : Error {
  using Error::Error;
};
struct Infeasible : Error {
  using Error::Error;
};
struct ClosureViolation : Error {
  using Error::Error;
};
struct NotAligned : Error {
  using Error::Error;
};
struct NegativeVariance : Error {
  using Error::Error;
};
struct SingularChannel : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qtp
