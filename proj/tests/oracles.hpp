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
#ifndef ZDSPEC_TESTS_ORACLES_HPP
#define ZDSPEC_TESTS_ORACLES_HPP

// Slow, independent reference implementations the tests compare against.
// None of them shares code with the library beyond element encoding.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "zdspec/equations.hpp"
#include "zdspec/gf.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // constant term first

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if (std::uint64_t{a} * x % p == 1) return x;
  return 0;
}

// Remainder of f by monic-or-not g over F_p.
inline Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = std::uint64_t{f.back()} * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - factor) * g[i]) % p);
    trim(f);
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..n/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t deg = 1; 2 * deg <= n; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(deg + 1);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < deg; ++i, v /= p) g[i] = static_cast<std::uint32_t>(v % p);
      g[deg] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Schoolbook product of the coefficient vectors reduced by the modulus.
inline std::uint32_t slow_mul(const zdspec::gf::Field& f, std::uint32_t a, std::uint32_t b) {
  const auto ca = f.coefficients(a), cb = f.coefficients(b);
  const std::uint32_t p = f.p();
  Poly prod(ca.size() + cb.size(), 0);
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p);
  Poly r = poly_rem(prod, f.spec().modulus, p);
  r.resize(f.n(), 0);
  return f.encode(r);
}

// All z in F_{2^n} with z^(2^k) + z = B, by Gaussian elimination over GF(2)
// on the linear map z -> z^(2^k) + z written in the polynomial basis.
inline std::vector<std::uint32_t> linear_trinomial_roots(const zdspec::gf::Field& f, std::uint32_t k,
                                                         std::uint32_t B) {
  const std::uint32_t n = f.n();
  auto L = [&](std::uint32_t z) { return f.frobenius(z, k) ^ z; };
  // Augmented rows: row r holds bit r of L(e_c) for each column c, plus bit r of B.
  std::vector<std::uint64_t> rows(n, 0);
  for (std::uint32_t c = 0; c < n; ++c) {
    const std::uint32_t img = L(1u << c);
    for (std::uint32_t r = 0; r < n; ++r)
      if (img >> r & 1) rows[r] |= std::uint64_t{1} << c;
  }
  for (std::uint32_t r = 0; r < n; ++r)
    if (B >> r & 1) rows[r] |= std::uint64_t{1} << n;
  std::vector<int> pivot_col;
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < n && rank < n; ++c) {
    std::uint32_t sel = rank;
    while (sel < n && !(rows[sel] >> c & 1)) ++sel;
    if (sel == n) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::uint32_t r = 0; r < n; ++r)
      if (r != rank && (rows[r] >> c & 1)) rows[r] ^= rows[rank];
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  for (std::uint32_t r = rank; r < n; ++r)
    if (rows[r] >> n & 1) return {};
  std::vector<std::uint32_t> free_cols;
  for (std::uint32_t c = 0; c < n; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end()) free_cols.push_back(c);
  std::vector<std::uint32_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_cols.size()); ++mask) {
    std::uint32_t z = 0;
    for (std::size_t i = 0; i < free_cols.size(); ++i)
      if (mask >> i & 1) z |= 1u << free_cols[i];
    for (std::uint32_t r = 0; r < rank; ++r) {
      std::uint32_t bit = rows[r] >> n & 1;
      for (auto c : free_cols)
        if ((rows[r] >> c & 1) && (z >> c & 1)) bit ^= 1;
      if (bit) z |= 1u << pivot_col[r];
    }
    out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Roots of a polynomial over F_{2^n} (coefficients constant term first) that
// lie in the extension of degree `ext`, found by embedding and exhaustion.
class ExtensionRootCounter {
 public:
  explicit ExtensionRootCounter(const zdspec::gf::Field::Ptr& base) : base_(base) {}

  std::size_t count(std::span<const std::uint32_t> coeffs, std::uint32_t ext) {
    if (ext == 1) return zdspec::equations::brute_roots(*base_, coeffs).size();
    auto it = embeddings_.find(ext);
    if (it == embeddings_.end()) {
      auto large = zdspec::gf::Field::canonical(base_->p(), base_->n() * ext);
      it = embeddings_.emplace(ext, zdspec::gf::Embedding(base_, large)).first;
    }
    std::vector<std::uint32_t> mapped;
    for (auto c : coeffs) mapped.push_back(it->second.map(c));
    return zdspec::equations::brute_roots(*it->second.large(), mapped).size();
  }

 private:
  zdspec::gf::Field::Ptr base_;
  std::map<std::uint32_t, zdspec::gf::Embedding> embeddings_;
};

// Factor shape of the squarefree quartic x^4 + a2 x^2 + a1 x + a0 from root
// counts in F_{2^n} and F_{2^{2n}}.
inline zdspec::equations::FactorShape quartic_shape(ExtensionRootCounter& rc, std::uint32_t a2, std::uint32_t a1,
                                                    std::uint32_t a0) {
  using zdspec::equations::FactorShape;
  const std::vector<std::uint32_t> f{a0, a1, a2, 0, 1};
  switch (rc.count(f, 1)) {
    case 4: return FactorShape::Quartic1111;
    case 2: return FactorShape::Quartic112;
    case 1: return FactorShape::Quartic13;
    default: break;
  }
  return rc.count(f, 2) == 4 ? FactorShape::Quartic22 : FactorShape::Quartic4;
}

inline zdspec::equations::FactorShape cubic_shape(ExtensionRootCounter& rc, std::uint32_t a2, std::uint32_t a1) {
  using zdspec::equations::FactorShape;
  const std::vector<std::uint32_t> f{a1, a2, 0, 1};
  switch (rc.count(f, 1)) {
    case 3: return FactorShape::Cubic111;
    case 1: return FactorShape::Cubic12;
    default: return FactorShape::Cubic3;
  }
}

// Brute-force second-order count straight from the definition, no tables.
inline std::uint64_t sozd_count(const zdspec::gf::Field& f, std::uint64_t d, std::uint32_t a, std::uint32_t b) {
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const auto F = [&](std::uint32_t v) { return f.pow(v, d); };
    const std::uint32_t lhs = f.add(F(f.add(f.add(x, a), b)), F(x));
    const std::uint32_t rhs = f.add(F(f.add(x, b)), F(f.add(x, a)));
    count += lhs == rhs;
  }
  return count;
}

}  // namespace oracle

#endif  // ZDSPEC_TESTS_ORACLES_HPP
