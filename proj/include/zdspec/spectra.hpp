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
#ifndef ZDSPEC_SPECTRA_HPP
#define ZDSPEC_SPECTRA_HPP

// Exhaustive difference tables of maps F_{p^n} -> F_{p^n}:
//   DDT(a, b)  = #{x : F(x + a) - F(x) = b}
//   SOZD(a, b) = #{x : F(x + a + b) - F(x + b) - F(x + a) + F(x) = 0}
//   FBCT(a, b) = #{x : F(x) + F(x + a) + F(x + b) + F(x + a + b) = 0}  (p = 2)
// Tables are row-major in canonical element order (row a, column b).

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zdspec/error.hpp"
#include "zdspec/gf.hpp"

namespace zdspec::spectra {

using gf::Element;
using gf::Field;

// x -> x^d evaluated by exponentiation on every call. 0^d = 0 for d >= 1.
class PowerFunction {
 public:
  PowerFunction(Field::Ptr field, std::uint64_t d);

  std::uint64_t exponent() const noexcept { return d_; }
  const Field& field() const noexcept { return *field_; }
  const Field::Ptr& field_ptr() const noexcept { return field_; }
  std::uint32_t operator()(std::uint32_t x) const noexcept { return field_->pow(x, d_); }
  Element operator()(const Element& x) const;

 private:
  Field::Ptr field_;
  std::uint64_t d_;
};

// Lookup-table map; the precomputed form used by full-table runs.
class Sbox {
 public:
  Sbox(Field::Ptr field, std::vector<std::uint32_t> values);
  static Sbox tabulate(const PowerFunction& f);
  static Sbox power(Field::Ptr field, std::uint64_t d) { return tabulate(PowerFunction(std::move(field), d)); }

  const Field& field() const noexcept { return *field_; }
  const Field::Ptr& field_ptr() const noexcept { return field_; }
  std::uint32_t operator()(std::uint32_t x) const noexcept { return values_[x]; }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

 private:
  Field::Ptr field_;
  std::vector<std::uint32_t> values_;
};

template <class F>
concept FieldMap = requires(const F& f, std::uint32_t x) {
  { f(x) } -> std::convertible_to<std::uint32_t>;
  { f.field() } -> std::same_as<const Field&>;
};

template <FieldMap F>
std::uint32_t ddt_entry(const F& fn, std::uint32_t a, std::uint32_t b) {
  const Field& k = fn.field();
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < k.order(); ++x)
    if (k.sub(fn(k.add(x, a)), fn(x)) == b) ++count;
  return count;
}

template <FieldMap F>
std::uint32_t sozd_entry(const F& fn, std::uint32_t a, std::uint32_t b) {
  const Field& k = fn.field();
  const std::uint32_t ab = k.add(a, b);
  std::uint32_t count = 0;
  if (k.p() == 2) {
    for (std::uint32_t x = 0; x < k.order(); ++x)
      if ((fn(x ^ ab) ^ fn(x ^ b) ^ fn(x ^ a) ^ fn(x)) == 0) ++count;
    return count;
  }
  for (std::uint32_t x = 0; x < k.order(); ++x)
    if (k.add(fn(k.add(x, ab)), fn(x)) == k.add(fn(k.add(x, b)), fn(k.add(x, a)))) ++count;
  return count;
}

template <FieldMap F>
std::uint32_t fbct_entry(const F& fn, std::uint32_t a, std::uint32_t b) {
  const Field& k = fn.field();
  if (k.p() != 2) throw Error(Errc::Characteristic, "FBCT is defined in characteristic 2 only");
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < k.order(); ++x)
    if ((fn(x) ^ fn(x ^ a) ^ fn(x ^ b) ^ fn(x ^ a ^ b)) == 0) ++count;
  return count;
}

namespace detail {
inline void require_field(const Field& f, const Element& e) {
  if (!f.same_as(*e.field())) throw Error(Errc::FieldMismatch, "difference taken outside the map's field");
}
}  // namespace detail

template <FieldMap F>
std::uint32_t ddt_entry(const F& fn, const Element& a, const Element& b) {
  detail::require_field(fn.field(), a);
  detail::require_field(fn.field(), b);
  return ddt_entry(fn, a.value(), b.value());
}
template <FieldMap F>
std::uint32_t sozd_entry(const F& fn, const Element& a, const Element& b) {
  detail::require_field(fn.field(), a);
  detail::require_field(fn.field(), b);
  return sozd_entry(fn, a.value(), b.value());
}
template <FieldMap F>
std::uint32_t fbct_entry(const F& fn, const Element& a, const Element& b) {
  detail::require_field(fn.field(), a);
  detail::require_field(fn.field(), b);
  return fbct_entry(fn, a.value(), b.value());
}

enum class TableKind { Ddt, Fbct, Sozd };
std::string_view to_string(TableKind k);
std::optional<TableKind> parse_table_kind(std::string_view s);

struct Table {
  Field::Ptr field;
  TableKind kind;
  std::vector<std::uint32_t> counts;

  std::uint32_t dim() const noexcept { return field->order(); }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return counts.at(std::size_t{a} * dim() + b); }
};

// Rows are computed in parallel; the result does not depend on threads.
// threads == 0 means hardware concurrency. FBCT in odd characteristic throws.
Table full_table(const Sbox& sbox, TableKind kind, unsigned threads = 0);

// Which (a, b) pairs a uniformity ranges over.
enum class Admissible {
  NonzeroInput,   // DDT: a != 0
  Char2Sozd,      // p = 2: a, b != 0 and a != b
  OddSozd,        // p > 2: a, b != 0 (a = b allowed)
  FbctOffTriangle // ab(a + b) != 0
};
std::string_view describe(Admissible adm);
bool is_admissible(const Field& f, Admissible adm, std::uint32_t a, std::uint32_t b);
// Convention for a table kind on a given field.
Admissible admissible_for(TableKind kind, const Field& f);

struct SpectrumSummary {
  std::map<std::uint32_t, std::uint64_t> histogram;  // entry value -> frequency
  std::uint32_t uniformity = 0;
  Admissible admissible = Admissible::NonzeroInput;

  std::uint64_t pairs() const;
};

SpectrumSummary summarize(const Table& t);
SpectrumSummary summarize(const Table& t, Admissible adm);

std::uint32_t differential_uniformity(const Sbox& sbox, unsigned threads = 0);
SpectrumSummary sozd_uniformity(const Sbox& sbox, unsigned threads = 0);
std::uint32_t feistel_boomerang_uniformity(const Sbox& sbox, unsigned threads = 0);

struct PropertyCheck {
  std::string name;
  bool holds = true;
  std::uint64_t violations = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;  // first violating (a, b)
  // Informational checks are reported but do not affect passed().
  bool informational = false;
  std::string note;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool passed() const;
  const PropertyCheck& check(std::string_view name) const;
};

// Symmetry, multiplicity mod 4, first line, first column, diagonal, and
// FBCT(a, b) = FBCT(a, a + b). The variant FBCT(a, a) = FBCT(a, a + b) is
// evaluated too, as an informational check.
PropertyReport fbct_property_suite(const Table& fbct);
PropertyReport fbct_property_suite(const Sbox& sbox, unsigned threads = 0);

// Header row "a\b,<labels>", then one row per a: label followed by counts.
void write_csv(const Table& t, std::ostream& os);
nlohmann::ordered_json to_json(const SpectrumSummary& s);
nlohmann::ordered_json to_json(const PropertyReport& r, const Field& f);

}  // namespace zdspec::spectra

#endif  // ZDSPEC_SPECTRA_HPP
