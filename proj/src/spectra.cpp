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
#include "zdspec/spectra.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace zdspec::spectra {

PowerFunction::PowerFunction(Field::Ptr field, std::uint64_t d) : field_(std::move(field)), d_(d) {
  if (!field_) throw Error(Errc::InvalidArgument, "power function without a field");
  if (d_ == 0) throw Error(Errc::InvalidArgument, "power function exponent must be positive");
}

Element PowerFunction::operator()(const Element& x) const {
  detail::require_field(*field_, x);
  return field_->element((*this)(x.value()));
}

Sbox::Sbox(Field::Ptr field, std::vector<std::uint32_t> values) : field_(std::move(field)), values_(std::move(values)) {
  if (!field_) throw Error(Errc::InvalidArgument, "lookup table without a field");
  if (values_.size() != field_->order()) throw Error(Errc::InvalidArgument, "lookup table needs one value per element");
  for (auto v : values_)
    if (v >= field_->order()) throw Error(Errc::InvalidArgument, "lookup table value outside the field");
}

Sbox Sbox::tabulate(const PowerFunction& f) {
  std::vector<std::uint32_t> values(f.field().order());
  for (std::uint32_t x = 0; x < values.size(); ++x) values[x] = f(x);
  return Sbox(f.field_ptr(), std::move(values));
}

std::string_view to_string(TableKind k) {
  switch (k) {
    case TableKind::Ddt: return "ddt";
    case TableKind::Fbct: return "fbct";
    case TableKind::Sozd: return "sozd";
  }
  return "?";
}

std::optional<TableKind> parse_table_kind(std::string_view s) {
  if (s == "ddt") return TableKind::Ddt;
  if (s == "fbct") return TableKind::Fbct;
  if (s == "sozd") return TableKind::Sozd;
  return std::nullopt;
}

Table full_table(const Sbox& sbox, TableKind kind, unsigned threads) {
  const Field& k = sbox.field();
  const std::uint32_t q = k.order();
  if (kind == TableKind::Fbct && k.p() != 2)
    throw Error(Errc::Characteristic, "FBCT is defined in characteristic 2 only");
  Table t{sbox.field_ptr(), kind, std::vector<std::uint32_t>(std::size_t{q} * q, 0)};

  zdspec::detail::parallel_for(q, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t row = begin; row < end; ++row) {
      const auto a = static_cast<std::uint32_t>(row);
      std::uint32_t* out = t.counts.data() + row * q;
      switch (kind) {
        case TableKind::Ddt:
          for (std::uint32_t x = 0; x < q; ++x) ++out[k.sub(sbox(k.add(x, a)), sbox(x))];
          break;
        case TableKind::Fbct:
        case TableKind::Sozd:
          for (std::uint32_t b = 0; b < q; ++b) out[b] = sozd_entry(sbox, a, b);
          break;
      }
    }
  });
  return t;
}

std::string_view describe(Admissible adm) {
  switch (adm) {
    case Admissible::NonzeroInput: return "a != 0";
    case Admissible::Char2Sozd: return "a != 0, b != 0, a != b";
    case Admissible::OddSozd: return "a != 0, b != 0";
    case Admissible::FbctOffTriangle: return "ab(a+b) != 0";
  }
  return "?";
}

bool is_admissible(const Field& f, Admissible adm, std::uint32_t a, std::uint32_t b) {
  switch (adm) {
    case Admissible::NonzeroInput: return a != 0;
    case Admissible::Char2Sozd: return a != 0 && b != 0 && a != b;
    case Admissible::OddSozd: return a != 0 && b != 0;
    case Admissible::FbctOffTriangle: return a != 0 && b != 0 && f.add(a, b) != 0;
  }
  return false;
}

Admissible admissible_for(TableKind kind, const Field& f) {
  switch (kind) {
    case TableKind::Ddt: return Admissible::NonzeroInput;
    case TableKind::Fbct: return Admissible::FbctOffTriangle;
    case TableKind::Sozd: return f.p() == 2 ? Admissible::Char2Sozd : Admissible::OddSozd;
  }
  return Admissible::NonzeroInput;
}

std::uint64_t SpectrumSummary::pairs() const {
  std::uint64_t total = 0;
  for (const auto& [value, freq] : histogram) total += freq;
  return total;
}

SpectrumSummary summarize(const Table& t) { return summarize(t, admissible_for(t.kind, *t.field)); }

SpectrumSummary summarize(const Table& t, Admissible adm) {
  SpectrumSummary s;
  s.admissible = adm;
  const std::uint32_t q = t.dim();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (!is_admissible(*t.field, adm, a, b)) continue;
      const std::uint32_t v = t.counts[std::size_t{a} * q + b];
      ++s.histogram[v];
      s.uniformity = std::max(s.uniformity, v);
    }
  return s;
}

std::uint32_t differential_uniformity(const Sbox& sbox, unsigned threads) {
  return summarize(full_table(sbox, TableKind::Ddt, threads)).uniformity;
}

SpectrumSummary sozd_uniformity(const Sbox& sbox, unsigned threads) {
  return summarize(full_table(sbox, TableKind::Sozd, threads));
}

std::uint32_t feistel_boomerang_uniformity(const Sbox& sbox, unsigned threads) {
  return summarize(full_table(sbox, TableKind::Fbct, threads)).uniformity;
}

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.informational || c.holds; });
}

const PropertyCheck& PropertyReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error(Errc::InvalidArgument, "no property check named " + std::string(name));
}

PropertyReport fbct_property_suite(const Table& t) {
  const Field& k = *t.field;
  if (k.p() != 2) throw Error(Errc::Characteristic, "FBCT properties apply in characteristic 2 only");
  const std::uint32_t q = t.dim();

  PropertyReport r;
  auto run = [&](std::string name, auto&& holds_at, bool informational = false, std::string note = {}) {
    PropertyCheck c{std::move(name), true, 0, std::nullopt, informational, std::move(note)};
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        if (holds_at(a, b)) continue;
        c.holds = false;
        ++c.violations;
        if (!c.witness) c.witness = std::make_pair(a, b);
      }
    r.checks.push_back(std::move(c));
  };

  run("symmetry", [&](auto a, auto b) { return t.at(a, b) == t.at(b, a); });
  run("multiplicity", [&](auto a, auto b) { return t.at(a, b) % 4 == 0; });
  run("first_line", [&](auto, auto b) { return t.at(0, b) == q; });
  run("first_column", [&](auto a, auto) { return t.at(a, 0) == q; });
  run("diagonal", [&](auto a, auto) { return t.at(a, a) == q; });
  run("equalities", [&](auto a, auto b) { return t.at(a, b) == t.at(a, a ^ b); });
  run("equalities_as_printed", [&](auto a, auto b) { return t.at(a, a) == t.at(a, a ^ b); }, true,
      "FBCT(a,a) = FBCT(a,a+b) forces every entry to 2^n; suspected typo for FBCT(a,b) = FBCT(a,a+b)");
  return r;
}

PropertyReport fbct_property_suite(const Sbox& sbox, unsigned threads) {
  return fbct_property_suite(full_table(sbox, TableKind::Fbct, threads));
}

void write_csv(const Table& t, std::ostream& os) {
  const Field& k = *t.field;
  const std::uint32_t q = t.dim();
  std::vector<std::string> labels(q);
  for (std::uint32_t v = 0; v < q; ++v) labels[v] = k.label(v);
  os << "a\\b";
  for (const auto& l : labels) os << ',' << l;
  os << '\n';
  for (std::uint32_t a = 0; a < q; ++a) {
    os << labels[a];
    for (std::uint32_t b = 0; b < q; ++b) os << ',' << t.counts[std::size_t{a} * q + b];
    os << '\n';
  }
}

nlohmann::ordered_json to_json(const SpectrumSummary& s) {
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [value, freq] : s.histogram) hist[std::to_string(value)] = freq;
  nlohmann::ordered_json j;
  j["histogram"] = std::move(hist);
  j["uniformity"] = s.uniformity;
  j["admissible"] = std::string(describe(s.admissible));
  return j;
}

nlohmann::ordered_json to_json(const PropertyReport& r, const Field& f) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["holds"] = c.holds;
    j["violations"] = c.violations;
    j["witness"] = c.witness ? nlohmann::ordered_json{f.label(c.witness->first), f.label(c.witness->second)}
                             : nlohmann::ordered_json(nullptr);
    j["informational"] = c.informational;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace zdspec::spectra
