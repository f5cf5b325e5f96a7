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
#ifndef ZDSPEC_ZP_POLY_HPP
#define ZDSPEC_ZP_POLY_HPP

// Dense polynomials over Z_p, constant term first. Internal helpers for
// modulus search and table construction; the zero polynomial is empty.

#include <cstdint>
#include <span>
#include <vector>

namespace zdspec::zp {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
// Remainder of f modulo the nonzero polynomial g.
Poly rem(Poly f, std::span<const std::uint32_t> g, std::uint32_t p);
Poly mul(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g, std::uint32_t p);
Poly mulmod(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g,
            std::span<const std::uint32_t> m, std::uint32_t p);
Poly powmod(Poly base, std::uint64_t k, std::span<const std::uint32_t> m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly sub(std::span<const std::uint32_t> f, std::span<const std::uint32_t> g, std::uint32_t p);

}  // namespace zdspec::zp

#endif  // ZDSPEC_ZP_POLY_HPP
