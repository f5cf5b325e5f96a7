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
#ifndef ZDSPEC_GF_HPP
#define ZDSPEC_GF_HPP

// Finite fields F_{p^n} built as Z_p[x]/(f) for a monic irreducible f.
//
// Elements are encoded canonically as integers in [0, p^n): the coefficient
// vector (c_0, ..., c_{n-1}) of the reduced representative maps to
// c_0 + c_1 p + ... + c_{n-1} p^{n-1}. Enumeration order is therefore
// "constant term fastest" and element 0 comes first. Multiplication goes
// through discrete log tables built once per field; addition in odd
// characteristic uses Zech logarithms, so every operation is O(1).
//
// Field objects are immutable after construction and may be shared freely
// between threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zdspec::gf {

inline constexpr std::uint64_t kDefaultOrderBound = std::uint64_t{1} << 20;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  // n + 1 coefficients, constant term first, modulus[n] == 1.
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t v);

// base^exp, or nullopt when the result exceeds limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp,
                                         std::uint64_t limit);

// Irreducibility over Z_p of a polynomial given constant term first.
// Constant and zero polynomials are not irreducible.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

// Smallest monic irreducible of degree n over Z_p, ordering candidates by
// their base-p value with the constant term as least significant digit.
// For (2, 3) this is x^3 + x + 1 and for (3, 2) it is x^2 + 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t n,
                                            std::uint64_t order_bound = kDefaultOrderBound);

// "x^3 + x + 1" style rendering, constant term first in the input.
std::string polynomial_string(std::span<const std::uint32_t> coeffs);

class Element;

class Field : public std::enable_shared_from_this<Field> {
 public:
  using Ptr = std::shared_ptr<const Field>;

  // Validates the spec (prime p, n >= 1, order within bound, monic and
  // irreducible modulus) and builds the arithmetic tables.
  static Ptr create(FieldSpec spec, std::uint64_t order_bound = kDefaultOrderBound);
  // Field over find_irreducible(p, n).
  static Ptr canonical(std::uint32_t p, std::uint32_t n,
                       std::uint64_t order_bound = kDefaultOrderBound);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t n() const noexcept { return spec_.n; }
  std::uint32_t order() const noexcept { return order_; }
  bool same_as(const Field& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

  // Raw arithmetic on encoded values. Arguments must lie in [0, order()).
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (spec_.p == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a];
    std::uint32_t k = log_[b] >= la ? log_[b] - la : log_[b] + (order_ - 1) - la;
    std::uint32_t z = zech_[k];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    if (spec_.p == 2 || a == 0) return a;
    return exp_[log_[a] + (order_ - 1) / 2];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Throws Error(DivisionByZero) on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const noexcept {
    if (a == 0) return k == 0 ? 1 : 0;
    std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) * (k % (order_ - 1))) % (order_ - 1);
    return exp_[e];
  }
  // a^(p^k); k is taken modulo n and may be negative.
  std::uint32_t frobenius(std::uint32_t a, std::int64_t k) const noexcept;
  // Tr_m^n(a) = sum of a^(p^(m i)) for 0 <= i < n/m. Requires m | n.
  std::uint32_t trace(std::uint32_t a, std::uint32_t m) const;

  std::uint32_t generator() const noexcept { return generator_; }
  // Discrete log base generator(). Requires a != 0.
  std::uint32_t log(std::uint32_t a) const noexcept { return log_[a]; }
  std::uint32_t exp(std::uint64_t k) const noexcept { return exp_[k % (order_ - 1)]; }

  std::vector<std::uint32_t> coefficients(std::uint32_t v) const;
  // Throws InvalidArgument on wrong length or out-of-range coefficient.
  std::uint32_t encode(std::span<const std::uint32_t> coeffs) const;
  // Base-p digits, constant term first ("011" is x + x^2 over F_2).
  std::string label(std::uint32_t v) const;

  Element element(std::uint32_t v) const;
  Element zero() const;
  Element one() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  explicit Field(FieldSpec spec);
  void build_tables();

  FieldSpec spec_;
  std::uint32_t order_ = 0;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> exp_;   // 2 (q - 1) entries
  std::vector<std::uint32_t> log_;   // q entries, log_[0] unused
  std::vector<std::uint32_t> zech_;  // odd p only: log(1 + g^k) or kNoLog
};

// Value-semantic handle on one field element. Mixing elements of different
// fields throws Error(FieldMismatch).
class Element {
 public:
  Element(Field::Ptr field, std::uint32_t value);

  const Field::Ptr& field() const noexcept { return field_; }
  std::uint32_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  std::vector<std::uint32_t> coefficients() const { return field_->coefficients(value_); }
  std::string label() const { return field_->label(value_); }

  Element pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }
  Element inv() const { return {field_, field_->inv(value_)}; }
  Element frobenius(std::int64_t k) const { return {field_, field_->frobenius(value_, k)}; }
  Element square() const { return {field_, field_->mul(value_, value_)}; }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  // Elements of different fields compare unequal.
  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.value_ == b.value_ && a.field_->same_as(*b.field_);
  }
  friend bool operator<(const Element& a, const Element& b) noexcept { return a.value_ < b.value_; }

 private:
  Field::Ptr field_;
  std::uint32_t value_;
};

void require_same_field(const Element& a, const Element& b);

// Tr_m^n(e). Throws InvalidArgument unless m divides n.
Element trace(const Element& e, std::uint32_t m);
Element frobenius(const Element& e, std::int64_t k);
// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
// Throws Error(Characteristic) when p == 2.
int quadratic_character(const Element& e);
// All p^n elements in canonical order, starting at 0.
std::vector<Element> enumerate(const Field::Ptr& field);

// F_{p^m} inside F_{p^n}: the fixed points of x -> x^(p^m).
class SubfieldMap {
 public:
  SubfieldMap(Field::Ptr field, std::uint32_t m);

  std::uint32_t m() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return order_; }
  bool contains(std::uint32_t v) const noexcept { return field_->frobenius(v, m_) == v; }
  bool contains(const Element& e) const;
  // Subfield members in canonical order of the ambient field.
  std::vector<std::uint32_t> elements() const;

 private:
  Field::Ptr field_;
  std::uint32_t m_;
  std::uint64_t order_;
};

// Field homomorphism F_{p^m} -> F_{p^n} (m | n) sending the generator x of the
// small field to the smallest root of its modulus in the large field.
class Embedding {
 public:
  Embedding(Field::Ptr small, Field::Ptr large);

  const Field::Ptr& small() const noexcept { return small_; }
  const Field::Ptr& large() const noexcept { return large_; }
  std::uint32_t map(std::uint32_t v) const { return image_.at(v); }
  Element operator()(const Element& e) const;

 private:
  Field::Ptr small_;
  Field::Ptr large_;
  std::vector<std::uint32_t> image_;
};

}  // namespace zdspec::gf

#endif  // ZDSPEC_GF_HPP
