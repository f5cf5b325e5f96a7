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
#ifndef ZDSPEC_FIELD_CACHE_HPP
#define ZDSPEC_FIELD_CACHE_HPP

// Plain-text field cache: one field per line as "p,n,c0,c1,...,cn" with the
// modulus coefficients constant term first. Blank lines and lines starting
// with '#' are ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdspec/gf.hpp"

namespace zdspec::gf {

std::string format_cache_line(const FieldSpec& spec);
// Throws Error(Io) on malformed input.
FieldSpec parse_cache_line(std::string_view line);

// A missing file reads as empty.
std::vector<FieldSpec> read_field_cache(const std::filesystem::path& path);
// First entry for (p, n). Entries whose modulus is not irreducible are
// rejected with Error(NotIrreducible).
std::optional<FieldSpec> lookup_field_cache(const std::filesystem::path& path, std::uint32_t p,
                                            std::uint32_t n);
void append_field_cache(const std::filesystem::path& path, const FieldSpec& spec);

}  // namespace zdspec::gf

#endif  // ZDSPEC_FIELD_CACHE_HPP
