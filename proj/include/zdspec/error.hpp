/* Copyright (C) 2026 The zdspec Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef ZDSPEC_ERROR_HPP
#define ZDSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zdspec {

// Numeric values are mirrored by zds_status in zdspec.h.
enum class Errc {
  InvalidArgument = 1,
  NotPrime = 2,
  NotIrreducible = 3,
  SizeBound = 4,
  Characteristic = 5,
  Hypothesis = 6,
  FieldMismatch = 7,
  DivisionByZero = 8,
  Io = 9,
  Internal = 10,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zdspec

#endif  // ZDSPEC_ERROR_HPP
