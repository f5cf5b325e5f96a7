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
#include "zdspec/field_cache.hpp"

#include <charconv>
#include <fstream>

#include "zdspec/error.hpp"

namespace zdspec::gf {

std::string format_cache_line(const FieldSpec& spec) {
  std::string out = std::to_string(spec.p) + "," + std::to_string(spec.n);
  for (auto c : spec.modulus) out += "," + std::to_string(c);
  return out;
}

FieldSpec parse_cache_line(std::string_view line) {
  std::vector<std::uint32_t> values;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end = line.find(',', pos);
    if (end == std::string_view::npos) end = line.size();
    std::string_view tok = line.substr(pos, end - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) tok.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(Errc::Io, "malformed field cache line: '" + std::string(line) + "'");
    values.push_back(v);
    pos = end + 1;
  }
  if (values.size() < 4 || values.size() != std::size_t{values[1]} + 3)
    throw Error(Errc::Io, "field cache line has the wrong number of fields: '" + std::string(line) + "'");
  return FieldSpec{values[0], values[1], std::vector<std::uint32_t>(values.begin() + 2, values.end())};
}

std::vector<FieldSpec> read_field_cache(const std::filesystem::path& path) {
  std::vector<FieldSpec> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v(line);
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    if (v.empty() || v.front() == '#' || v == "\r") continue;
    out.push_back(parse_cache_line(v));
  }
  return out;
}

std::optional<FieldSpec> lookup_field_cache(const std::filesystem::path& path, std::uint32_t p,
                                            std::uint32_t n) {
  for (auto& spec : read_field_cache(path)) {
    if (spec.p != p || spec.n != n) continue;
    if (spec.modulus.back() != 1 || !is_irreducible(spec.modulus, p))
      throw Error(Errc::NotIrreducible, "cached modulus for (" + std::to_string(p) + ", " +
                                            std::to_string(n) + ") is not monic irreducible");
    return spec;
  }
  return std::nullopt;
}

void append_field_cache(const std::filesystem::path& path, const FieldSpec& spec) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(Errc::Io, "cannot open field cache " + path.string() + " for writing");
  out << format_cache_line(spec) << '\n';
  if (!out) throw Error(Errc::Io, "failed writing field cache " + path.string());
}

}  // namespace zdspec::gf
