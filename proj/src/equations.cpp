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
#include "zdspec/equations.hpp"

#include <algorithm>
#include <optional>
#include <numeric>

#include "zdspec/error.hpp"

namespace zdspec::equations {

namespace {

void require_char2(const Field& f) {
  if (f.p() != 2) throw Error(Errc::Characteristic, "equation solver requires characteristic 2");
}

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(), [](const Element& a, const Element& b) { return a == b; }),
          v.end());
  return v;
}

// One root of y^2 + y = beta on raw values, or nullopt when Tr(beta) = 1.
// Odd n uses the half-trace; even n the k = 1 case of the trinomial formula,
// where the first element of absolute trace 1 plays the auxiliary role.
std::optional<std::uint32_t> artin_schreier_root(const Field& f, std::uint32_t beta) {
  if (f.trace(beta, 1) != 0) return std::nullopt;
  const std::uint32_t n = f.n();
  std::uint32_t y = 0;
  if (n % 2 == 1) {
    std::uint32_t t = beta;
    for (std::uint32_t i = 0; 2 * i < n; ++i) {
      y ^= t;
      t = f.mul(t, t);
      t = f.mul(t, t);
    }
  } else {
    std::uint32_t c = 1;
    while (c < f.order() && f.trace(c, 1) == 0) ++c;
    std::uint32_t partial = 0, cp = c, bp = beta;
    for (std::uint32_t i = 0; i < n; ++i) {
      partial ^= cp;
      y ^= f.mul(partial, bp);
      cp = f.mul(cp, cp);
      bp = f.mul(bp, bp);
    }
  }
  if ((f.mul(y, y) ^ y) != beta) throw Error(Errc::Internal, "Artin-Schreier root failed substitution");
  return y;
}

}  // namespace

std::vector<Element> solve_artin_schreier(const Element& beta) {
  const Field& f = *beta.field();
  require_char2(f);
  const auto y = artin_schreier_root(f, beta.value());
  if (!y) return {};
  const std::uint32_t lo = std::min(*y, *y ^ 1u), hi = std::max(*y, *y ^ 1u);
  return {f.element(lo), f.element(hi)};
}

std::vector<Element> solve_quadratic_char2(const QuadraticChar2& q) {
  gf::require_same_field(q.a, q.b);
  gf::require_same_field(q.a, q.c);
  const Field& f = *q.a.field();
  require_char2(f);
  if (q.a.is_zero()) throw Error(Errc::InvalidArgument, "leading coefficient of a quadratic must be nonzero");
  const std::uint32_t a = q.a.value(), b = q.b.value(), c = q.c.value();

  if (b == 0) {
    // x^2 = c/a has the unique root (c/a)^(2^(n-1)).
    return {f.element(f.frobenius(f.div(c, a), static_cast<std::int64_t>(f.n()) - 1))};
  }
  // x = (b/a) y turns a x^2 + b x + c into (b^2/a)(y^2 + y + ac/b^2).
  const auto y = artin_schreier_root(f, f.div(f.mul(a, c), f.mul(b, b)));
  if (!y) return {};
  const std::uint32_t scale = f.div(b, a);
  std::uint32_t x0 = f.mul(scale, *y), x1 = f.mul(scale, *y ^ 1u);
  for (std::uint32_t x : {x0, x1})
    if ((f.mul(a, f.mul(x, x)) ^ f.mul(b, x) ^ c) != 0) throw Error(Errc::Internal, "quadratic root failed substitution");
  if (x1 < x0) std::swap(x0, x1);
  return {f.element(x0), f.element(x1)};
}

TrinomialParams trinomial_params(const TrinomialEq& t) {
  const std::uint32_t n = t.B.field()->n();
  if (t.k == 0 || t.k >= n)
    throw Error(Errc::InvalidArgument, "trinomial exponent k must satisfy 0 < k < n");
  const std::uint32_t d = std::gcd(t.k, n);
  return {d, n / d};
}

std::vector<Element> solve_trinomial(const TrinomialEq& t) {
  const Field::Ptr& fp = t.B.field();
  const Field& f = *fp;
  require_char2(f);
  const auto [d, l] = trinomial_params(t);
  const auto k = static_cast<std::int64_t>(t.k);

  if (f.trace(t.B.value(), d) != 0) return {};

  std::uint32_t c = 0;
  while (c < f.order() && f.trace(c, d) == 0) ++c;
  if (c == f.order()) throw Error(Errc::Internal, "no element of nonzero relative trace");
  const Element ce = f.element(c);

  // x = Tr_d^n(c)^-1 * sum_i (sum_{j<=i} c^(2^(kj))) B^(2^(ki))
  Element partial = f.zero();
  Element sum = f.zero();
  for (std::uint32_t i = 0; i < l; ++i) {
    partial += ce.frobenius(k * i);
    sum += partial * t.B.frobenius(k * i);
  }
  const Element x = sum / trace(ce, d);
  if (x.frobenius(k) + x + t.B != f.zero())
    throw Error(Errc::Internal, "trinomial formula root failed substitution");

  std::vector<Element> roots;
  roots.reserve(std::size_t{1} << d);
  for (std::uint32_t delta : gf::SubfieldMap(fp, d).elements()) roots.push_back(x + f.element(delta));
  return sorted_unique(std::move(roots));
}

std::string_view to_string(FactorShape s) {
  switch (s) {
    case FactorShape::Quartic1111: return "(1,1,1,1)";
    case FactorShape::Quartic22: return "(2,2)";
    case FactorShape::Quartic13: return "(1,3)";
    case FactorShape::Quartic112: return "(1,1,2)";
    case FactorShape::Quartic4: return "(4)";
    case FactorShape::Cubic111: return "(1,1,1)";
    case FactorShape::Cubic12: return "(1,2)";
    case FactorShape::Cubic3: return "(3)";
  }
  return "?";
}

unsigned linear_factors(FactorShape s) {
  switch (s) {
    case FactorShape::Quartic1111: return 4;
    case FactorShape::Quartic112: return 2;
    case FactorShape::Quartic13: return 1;
    case FactorShape::Quartic22:
    case FactorShape::Quartic4: return 0;
    case FactorShape::Cubic111: return 3;
    case FactorShape::Cubic12: return 1;
    case FactorShape::Cubic3: return 0;
  }
  return 0;
}

CubicClassification classify_cubic(const Element& a2, const Element& a1) {
  gf::require_same_field(a2, a1);
  const Field::Ptr& fp = a2.field();
  require_char2(*fp);
  const Element zero = fp->zero();
  const std::vector<Element> coeffs{a1, a2, zero, fp->one()};
  auto roots = brute_roots(fp, coeffs);
  if (roots.empty()) return {FactorShape::Cubic3, {}};
  // (y + r)(y^2 + r y + r^2 + a2)
  const Element& r = roots.front();
  const auto rest = solve_quadratic_char2({fp->one(), r, r.square() + a2});
  return {rest.empty() ? FactorShape::Cubic12 : FactorShape::Cubic111, std::move(roots)};
}

QuarticClassification classify_quartic(const QuarticEq& q) {
  gf::require_same_field(q.a2, q.a1);
  gf::require_same_field(q.a2, q.a0);
  const Field::Ptr& fp = q.a2.field();
  const Field& f = *fp;
  require_char2(f);
  if (q.a0.is_zero() || q.a1.is_zero())
    throw Error(Errc::InvalidArgument, "quartic classification needs a0 * a1 != 0");

  QuarticClassification out{FactorShape::Quartic4, {}, FactorShape::Cubic3, {}, {}, {}, {}};
  auto cubic = classify_cubic(q.a2, q.a1);
  out.cubic_shape = cubic.shape;
  out.cubic_roots = cubic.roots;

  const Element scale = q.a0 / q.a1.square();
  for (const auto& r : cubic.roots) {
    out.omegas.push_back(scale * r.square());
    out.omega_traces.push_back(static_cast<int>(f.trace(out.omegas.back().value(), 1)));
  }

  switch (cubic.shape) {
    case FactorShape::Cubic3:
      out.shape = FactorShape::Quartic13;
      out.rule = "cubic irreducible";
      break;
    case FactorShape::Cubic12:
      if (out.omega_traces.size() != 1) throw Error(Errc::Internal, "cubic (1,2) with a repeated root");
      out.shape = out.omega_traces[0] == 0 ? FactorShape::Quartic112 : FactorShape::Quartic4;
      out.rule = out.omega_traces[0] == 0 ? "cubic (1,2), trace 0" : "cubic (1,2), trace 1";
      break;
    case FactorShape::Cubic111: {
      // a1 != 0 forces three distinct roots; their omegas sum to zero.
      if (out.omega_traces.size() != 3) throw Error(Errc::Internal, "cubic (1,1,1) with a repeated root");
      const int zeros = static_cast<int>(std::count(out.omega_traces.begin(), out.omega_traces.end(), 0));
      if (zeros == 3) {
        out.shape = FactorShape::Quartic1111;
        out.rule = "cubic split, all traces 0";
      } else if (zeros == 1) {
        out.shape = FactorShape::Quartic22;
        out.rule = "cubic split, one trace 0";
      } else {
        throw Error(Errc::Internal, "omega traces of a split cubic must sum to zero");
      }
      break;
    }
    default:
      throw Error(Errc::Internal, "unexpected cubic shape");
  }

  const std::vector<Element> coeffs{q.a0, q.a1, q.a2, f.zero(), f.one()};
  out.roots = brute_roots(fp, coeffs);
  return out;
}

std::vector<std::uint32_t> brute_roots(const Field& field, std::span<const std::uint32_t> coeffs) {
  std::vector<std::uint32_t> roots;
  for (std::uint32_t x = 0; x < field.order(); ++x) {
    std::uint32_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = field.add(field.mul(acc, x), coeffs[i]);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

std::vector<Element> brute_roots(const Field::Ptr& field, std::span<const Element> coeffs) {
  std::vector<std::uint32_t> raw;
  raw.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.field()->same_as(*field)) throw Error(Errc::FieldMismatch, "coefficient of another field");
    raw.push_back(c.value());
  }
  std::vector<Element> out;
  for (auto r : brute_roots(*field, raw)) out.push_back(field->element(r));
  return out;
}

}  // namespace zdspec::equations
