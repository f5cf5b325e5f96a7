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
#ifndef ZDSPEC_CLOSEDFORM_HPP
#define ZDSPEC_CLOSEDFORM_HPP

// Closed-form predictors for the second-order zero differential spectrum
// SOZD(a, b) of four power maps, and a harness that checks each predictor
// entry by entry against exhaustive counting.
//
//   X7Char2       x^7 over F_{2^n}
//   X2m1p3Char2   x^(2^(m+1)+3) over F_{2^n}, n = 2m or n = 2m + 1
//   X5Odd         x^5 over F_{p^n}, p odd, p != 5
//   X7Char3       x^7 over F_{3^n}
//   X7OddBound    x^7 over F_{p^n}, p > 3, p != 7 (uniformity <= 5, no closed form)
//
// Each predictor walks its cases in a fixed order and reports the first one
// that matches. If a later non-fallback case also matches with a different
// value the outcome is flagged as a conflict.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zdspec/gf.hpp"

namespace zdspec::closedform {

using gf::Element;
using gf::Field;

enum class Theorem { X7Char2, X2m1p3Char2, X5Odd, X7Char3, X7OddBound };

// Command-line identifier ("3.1", "3.2", "4.1", "4.2", "x7-bound").
std::string_view id(Theorem t);
std::string_view describe(Theorem t);
// Accepts the identifiers above and the aliases x7-char2, x2m1p3, x5-odd,
// x7-char3.
std::optional<Theorem> parse_theorem(std::string_view s);

struct PredictionOutcome {
  std::optional<std::uint64_t> value;  // nullopt: the case split does not determine the entry
  std::string_view case_label;
  bool conflict = false;

  bool predicted() const noexcept { return value.has_value(); }
};

// Quantities shared by the characteristic-2 predictors, for ab(a + b) != 0:
// c = a/b, a1 = c^2 + c, a2 = c^2 + c + 1, omega_1..3 = a0 {1, c^2, (c+1)^2} / a1^2.
struct PredictorContext {
  Element c;
  Element a0;
  Element a1;
  Element a2;
  Element omega1;
  Element omega2;
  Element omega3;

  bool traces_vanish() const;
};

// a0 = (c^2 + c + 1)^2.
PredictorContext x7_context(const Element& a, const Element& b);
// a0 from the n = 2m or n = 2m + 1 formula. For n = 2m requires c outside F_{2^m}.
PredictorContext x2m1p3_context(const Element& a, const Element& b);

std::uint32_t x2m1p3_m(std::uint32_t n);
std::uint64_t x2m1p3_exponent(std::uint32_t n);

PredictionOutcome predict_x7_char2(const Element& a, const Element& b);
PredictionOutcome predict_x2m1p3(const Element& a, const Element& b);
PredictionOutcome predict_x5_oddp(const Element& a, const Element& b);
PredictionOutcome predict_x7_p3(const Element& a, const Element& b);
// Throws Hypothesis for X7OddBound, which has no predictor.
PredictionOutcome predict(Theorem t, const Element& a, const Element& b);

// Throws Error(Hypothesis) when the field violates the statement's hypotheses.
void check_hypotheses(Theorem t, const Field& f);
std::uint64_t exponent(Theorem t, const Field& f);
// Uniformity the statement asserts for this field; nullopt when it asserts
// none (X7OddBound, and x^7 in characteristic 2 with n < 4).
std::optional<std::uint64_t> stated_uniformity(Theorem t, const Field& f);

// Exhaustive uniformity of x^7 for p > 3, p != 7; the statement only bounds
// it by 5.
std::uint32_t bound_x7_oddp(const Field::Ptr& f, unsigned threads = 0);

struct VerifyOptions {
  unsigned threads = 0;
  // Full verification when p^{3n} stays within this many evaluations.
  std::uint64_t full_evaluation_limit = std::uint64_t{1} << 24;
  bool force_full = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

struct Mismatch {
  std::uint32_t a;
  std::uint32_t b;
  std::uint64_t predicted;
  std::uint64_t actual;
  std::string case_label;
};

struct UnpredictedEntry {
  std::uint32_t a;
  std::uint32_t b;
  std::uint64_t actual;
  std::string case_label;
};

struct VerificationReport {
  Theorem theorem;
  gf::FieldSpec field;
  std::uint64_t exponent = 0;
  std::uint64_t pairs_checked = 0;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
  std::vector<Mismatch> mismatches;
  std::vector<UnpredictedEntry> unpredicted;
  std::uint64_t uniformity = 0;  // max brute-force count over admissible checked pairs
  std::optional<std::uint64_t> expected_uniformity;
  std::optional<std::uint64_t> uniformity_bound;
  std::map<std::string, std::uint64_t> case_counts;
  std::uint64_t conflicts = 0;
  std::vector<std::string> notes;

  bool passed() const;
  nlohmann::ordered_json to_json(const Field& f) const;
};

VerificationReport verify_theorem(Theorem t, const Field::Ptr& f, const VerifyOptions& opts = {});

}  // namespace zdspec::closedform

#endif  // ZDSPEC_CLOSEDFORM_HPP
