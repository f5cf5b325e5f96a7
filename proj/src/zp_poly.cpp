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
#include "zp_poly.hpp"

#include <algorithm>
#include <utility>

namespace zdspec::zp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t r = 1, b = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly rem(Poly f, std::span<const std::uint32_t> g, std::uint32_t p) {
  trim(f);
  std::size_t dg = g.size();
  while (dg > 0 && g[dg - 1] == 0) --dg;
  const std::uint64_t lead_inv = inverse_mod(g[dg - 1], p);
  while (f.size() >= dg) {
    const std::size_t shift = f.size() - dg;
    const std::uint64_t factor = f.back() * lead_inv % p;
    for (std::size_t i = 0; i < dg; ++i) {
      std::uint64_t t = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - t) % p);
    }
    trim(f);
  }
  return f;
}

Poly mul(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly mulmod(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g,
            std::span<const std::uint32_t> m, std::uint32_t p) {
  return rem(mul(f, g, p), m, p);
}

Poly powmod(Poly base, std::uint64_t k, std::span<const std::uint32_t> m, std::uint32_t p) {
  Poly result{1};
  base = rem(std::move(base), m, p);
  while (k) {
    if (k & 1) result = mulmod(result, base, m, p);
    k >>= 1;
    if (k) base = mulmod(base, base, m, p);
  }
  return rem(std::move(result), m, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inverse_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
  }
  return a;
}

Poly sub(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g, std::uint32_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t a = i < f.size() ? f[i] : 0;
    std::uint32_t b = i < g.size() ? g[i] : 0;
    out[i] = (a + p - b) % p;
  }
  trim(out);
  return out;
}

}  // namespace zdspec::zp
