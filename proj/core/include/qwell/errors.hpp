// Copyright 2026 The qwell Authors
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

#ifndef QWELL_ERRORS_HPP
#define QWELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwell {

/// Base class for all qwell error conditions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class NotDensityMatrix : public Error {
public:
  using Error::Error;
};

class NoBoundStates : public Error {
public:
  using Error::Error;
};

class BadLevels : public Error {
public:
  using Error::Error;
};

class ZeroDipole : public Error {
public:
  using Error::Error;
};

class AncillaOccupied : public Error {
public:
  using Error::Error;
};

}  // namespace qwell

#endif  // QWELL_ERRORS_HPP
