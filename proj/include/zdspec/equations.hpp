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
#ifndef ZDSPEC_EQUATIONS_HPP
#define ZDSPEC_EQUATIONS_HPP

// Root finding over F_{2^n}: quadratics via the trace criterion, the
// linearized trinomial z^(2^k) + z + B via an explicit trace formula, and
// factorization-shape classification of x^4 + a2 x^2 + a1 x + a0 through its
// companion cubic. brute_roots is the exhaustive ground truth the tests hold
// everything else against.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdspec/gf.hpp"

namespace zdspec::equations {

using gf::Element;
using gf::Field;

// a x^2 + b x + c, a != 0.
struct QuadraticChar2 {
  Element a;
  Element b;
  Element c;
};

// Root set in increasing canonical order. b = 0 gives the single root
// sqrt(c/a); otherwise there are two roots iff Tr_1^n(ac/b^2) = 0.
// Throws Characteristic for odd p and InvalidArgument for a = 0.
std::vector<Element> solve_quadratic_char2(const QuadraticChar2& q);

// Solutions of y^2 + y = beta: empty when Tr_1^n(beta) = 1, else {y, y + 1}.
std::vector<Element> solve_artin_schreier(const Element& beta);

// z^(2^k) + z + B with 0 < k < n.
struct TrinomialEq {
  std::uint32_t k;
  Element B;
};

struct TrinomialParams {
  std::uint32_t d;  // gcd(k, n)
  std::uint32_t l;  // n / d
};
TrinomialParams trinomial_params(const TrinomialEq& t);

// Empty when Tr_d^n(B) != 0, otherwise the coset x0 + F_{2^d} where x0 is
// given by the explicit trace formula. The auxiliary element of nonzero
// relative trace is the first one in canonical order. Every root is checked
// by substitution before returning.
std::vector<Element> solve_trinomial(const TrinomialEq& t);

enum class FactorShape {
  Quartic1111,
  Quartic22,
  Quartic13,
  Quartic112,
  Quartic4,
  Cubic111,
  Cubic12,
  Cubic3,
};

std::string_view to_string(FactorShape s);
// Number of degree-1 parts.
unsigned linear_factors(FactorShape s);

struct CubicClassification {
  FactorShape shape;
  std::vector<Element> roots;  // distinct roots in F_{2^n}
};

// y^3 + a2 y + a1 over F_{2^n}, classified by exhaustive root search and
// deflation of the first root found.
CubicClassification classify_cubic(const Element& a2, const Element& a1);

// x^4 + a2 x^2 + a1 x + a0 with a0 a1 != 0.
struct QuarticEq {
  Element a2;
  Element a1;
  Element a0;
};

struct QuarticClassification {
  FactorShape shape;
  std::vector<Element> roots;  // all roots in F_{2^n}
  FactorShape cubic_shape;
  std::vector<Element> cubic_roots;
  std::vector<Element> omegas;  // a0 r^2 / a1^2 for each cubic root r
  std::vector<int> omega_traces;
  std::string rule;  // which branch of the classification fired
};

// Shape from the companion cubic y^3 + a2 y + a1 and the absolute traces of
// omega_i = a0 r_i^2 / a1^2:
//   cubic (1,1,1), all traces 0  -> (1,1,1,1)
//   cubic (1,1,1), otherwise     -> (2,2)
//   cubic (3)                    -> (1,3)
//   cubic (1,2), trace 0         -> (1,1,2)
//   cubic (1,2), trace 1         -> (4)
// Root values come from exhaustive search.
QuarticClassification classify_quartic(const QuarticEq& q);

// Every field element at which the polynomial (constant term first) vanishes.
std::vector<Element> brute_roots(const Field::Ptr& field, std::span<const Element> coeffs);
std::vector<std::uint32_t> brute_roots(const Field& field, std::span<const std::uint32_t> coeffs);

}  // namespace zdspec::equations

#endif  // ZDSPEC_EQUATIONS_HPP
