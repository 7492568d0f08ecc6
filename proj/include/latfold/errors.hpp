/*
 * Copyright 2026 the latfold authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LATFOLD_ERRORS_HPP
#define LATFOLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latfold {

/// Invalid parameters, mismatched operands, or malformed configuration.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Internally inconsistent precomputed tables (CRT split integrity).
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A generator set was used for membership tests before calibration.
class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Prime scan ran out of candidates inside the allowed budget.
class SearchExhaustedError : public std::runtime_error {
 public:
  explicit SearchExhaustedError(const std::string& what)
      : std::runtime_error(what) {}
};

/// File read/write failure.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latfold

#endif  // LATFOLD_ERRORS_HPP
