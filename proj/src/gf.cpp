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
#include "zdspec/gf.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "zdspec/error.hpp"
#include "zp_poly.hpp"

namespace zdspec::gf {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f) continue;
    out.push_back(f);
    while (v % f == 0) v /= f;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (e) {
    if (e & 1) r = r * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

void validate_characteristic(std::uint32_t p, std::uint32_t n, std::uint64_t order_bound) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  if (!checked_pow(p, n, order_bound))
    throw Error(Errc::SizeBound, "field order " + std::to_string(p) + "^" + std::to_string(n) +
                                     " exceeds the configured bound " + std::to_string(order_bound));
}

}  // namespace

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  return q;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f)
    if (v % f == 0) return false;
  return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  if (r > limit) return std::nullopt;
  return r;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  zp::Poly f(poly.begin(), poly.end());
  for (auto c : f)
    if (c >= p) return false;
  zp::trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // f is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= deg/2.
  const zp::Poly x{0, 1};
  zp::Poly h = zp::rem(x, f, p);
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = zp::powmod(h, p, f, p);
    zp::Poly g = zp::gcd(f, zp::sub(h, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t n, std::uint64_t order_bound) {
  validate_characteristic(p, n, order_bound);
  const std::uint64_t q = *checked_pow(p, n, order_bound);
  std::vector<std::uint32_t> f(n + 1, 0);
  f[n] = 1;
  for (std::uint64_t v = 0; v < q; ++v) {
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < n; ++i, t /= p) f[i] = static_cast<std::uint32_t>(t % p);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(Errc::Internal, "no irreducible polynomial found");
}

std::string polynomial_string(std::span<const std::uint32_t> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::uint32_t c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

// --- Field -----------------------------------------------------------------

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  order_ = static_cast<std::uint32_t>(spec_.order());
}

Field::Ptr Field::create(FieldSpec spec, std::uint64_t order_bound) {
  validate_characteristic(spec.p, spec.n, order_bound);
  if (spec.modulus.size() != std::size_t{spec.n} + 1)
    throw Error(Errc::InvalidArgument, "modulus must have n + 1 coefficients");
  for (auto c : spec.modulus)
    if (c >= spec.p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range [0, p)");
  if (spec.modulus.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
  if (!is_irreducible(spec.modulus, spec.p))
    throw Error(Errc::NotIrreducible, "modulus " + polynomial_string(spec.modulus) +
                                          " is reducible over Z_" + std::to_string(spec.p));
  std::shared_ptr<Field> f(new Field(std::move(spec)));
  f->build_tables();
  return f;
}

Field::Ptr Field::canonical(std::uint32_t p, std::uint32_t n, std::uint64_t order_bound) {
  return create(FieldSpec{p, n, find_irreducible(p, n, order_bound)}, order_bound);
}

void Field::build_tables() {
  const std::uint32_t p = spec_.p;
  const std::uint32_t n = spec_.n;
  const std::uint32_t q = order_;
  const std::span<const std::uint32_t> m(spec_.modulus);

  auto to_poly = [&](std::uint32_t v) {
    zp::Poly f(n, 0);
    for (std::uint32_t i = 0; i < n; ++i, v /= p) f[i] = v % p;
    zp::trim(f);
    return f;
  };
  auto from_poly = [&](const zp::Poly& f) {
    std::uint32_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
    return v;
  };

  // Multiplicative generator: smallest element whose order is q - 1.
  const auto factors = prime_factors(q - 1);
  auto is_generator = [&](std::uint32_t g) {
    for (auto r : factors)
      if (from_poly(zp::powmod(to_poly(g), (q - 1) / r, m, p)) == 1) return false;
    return true;
  };
  std::uint32_t g = 1;
  if (q > 2) {
    // x is tried first: when it is primitive the table walk below is a shift.
    const std::uint32_t x = n > 1 ? p : 0;
    if (x != 0 && is_generator(x)) {
      g = x;
    } else {
      for (g = 2; g < q && !is_generator(g); ++g) {
      }
    }
  }
  generator_ = g;

  exp_.assign(2 * std::size_t{q - 1}, 0);
  log_.assign(q, 0);
  const zp::Poly gp = to_poly(g);
  zp::Poly cur{1};
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    const std::uint32_t v = from_poly(cur);
    exp_[i] = exp_[i + q - 1] = v;
    log_[v] = i;
    cur = zp::mulmod(cur, gp, m, p);
  }

  if (p != 2) {
    zech_.assign(q - 1, kNoLog);
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      const std::uint32_t v = exp_[k];
      const std::uint32_t w = (v % p == p - 1) ? v - (p - 1) : v + 1;
      if (w != 0) zech_[k] = log_[w];
    }
  }
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

std::uint32_t Field::frobenius(std::uint32_t a, std::int64_t k) const noexcept {
  if (a == 0) return 0;
  const std::int64_t n = spec_.n;
  const std::uint64_t kk = static_cast<std::uint64_t>(((k % n) + n) % n);
  return pow(a, mod_pow(spec_.p, kk, order_ - 1));
}

std::uint32_t Field::trace(std::uint32_t a, std::uint32_t m) const {
  if (m == 0 || spec_.n % m != 0)
    throw Error(Errc::InvalidArgument, "trace degree " + std::to_string(m) + " does not divide " +
                                           std::to_string(spec_.n));
  const std::uint64_t step = mod_pow(spec_.p, m, order_ - 1);
  std::uint32_t acc = a;
  std::uint32_t t = a;
  for (std::uint32_t i = 1; i < spec_.n / m; ++i) {
    t = pow(t, step);
    acc = add(acc, t);
  }
  return acc;
}

std::vector<std::uint32_t> Field::coefficients(std::uint32_t v) const {
  std::vector<std::uint32_t> out(spec_.n, 0);
  for (std::uint32_t i = 0; i < spec_.n; ++i, v /= spec_.p) out[i] = v % spec_.p;
  return out;
}

std::uint32_t Field::encode(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != spec_.n) throw Error(Errc::InvalidArgument, "element needs exactly n coefficients");
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= spec_.p) throw Error(Errc::InvalidArgument, "coefficient out of range [0, p)");
    v = v * spec_.p + coeffs[i];
  }
  return v;
}

std::string Field::label(std::uint32_t v) const {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  const auto c = coefficients(v);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (spec_.p <= 36) {
      out.push_back(kDigits[c[i]]);
    } else {
      if (i) out.push_back('.');
      out += std::to_string(c[i]);
    }
  }
  return out;
}

Element Field::element(std::uint32_t v) const { return Element(shared_from_this(), v); }
Element Field::zero() const { return element(0); }
Element Field::one() const { return element(1); }

// --- Element ---------------------------------------------------------------

Element::Element(Field::Ptr field, std::uint32_t value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(Errc::InvalidArgument, "element without a field");
  if (value_ >= field_->order()) throw Error(Errc::InvalidArgument, "element encoding out of range");
}

void require_same_field(const Element& a, const Element& b) {
  if (!a.field()->same_as(*b.field()))
    throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

Element operator+(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}
Element operator-(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}
Element operator*(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}
Element operator/(const Element& a, const Element& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}
Element operator-(const Element& a) { return {a.field_, a.field_->neg(a.value_)}; }

Element trace(const Element& e, std::uint32_t m) { return {e.field(), e.field()->trace(e.value(), m)}; }

Element frobenius(const Element& e, std::int64_t k) { return e.frobenius(k); }

int quadratic_character(const Element& e) {
  const Field& f = *e.field();
  if (f.p() == 2) throw Error(Errc::Characteristic, "quadratic character needs odd characteristic");
  if (e.is_zero()) return 0;
  const std::uint32_t r = f.pow(e.value(), (std::uint64_t{f.order()} - 1) / 2);
  if (r == 1) return 1;
  if (r == f.neg(1)) return -1;
  throw Error(Errc::Internal, "Euler criterion produced neither 1 nor -1");
}

std::vector<Element> enumerate(const Field::Ptr& field) {
  std::vector<Element> out;
  out.reserve(field->order());
  for (std::uint32_t v = 0; v < field->order(); ++v) out.emplace_back(field, v);
  return out;
}

// --- SubfieldMap -----------------------------------------------------------

SubfieldMap::SubfieldMap(Field::Ptr field, std::uint32_t m) : field_(std::move(field)), m_(m) {
  if (m == 0 || field_->n() % m != 0)
    throw Error(Errc::InvalidArgument, "subfield degree " + std::to_string(m) + " does not divide " +
                                           std::to_string(field_->n()));
  order_ = *checked_pow(field_->p(), m, field_->order());
}

bool SubfieldMap::contains(const Element& e) const {
  if (!e.field()->same_as(*field_)) throw Error(Errc::FieldMismatch, "element of another field");
  return contains(e.value());
}

std::vector<std::uint32_t> SubfieldMap::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(order_);
  for (std::uint32_t v = 0; v < field_->order(); ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

// --- Embedding -------------------------------------------------------------

Embedding::Embedding(Field::Ptr small, Field::Ptr large) : small_(std::move(small)), large_(std::move(large)) {
  if (small_->p() != large_->p() || large_->n() % small_->n() != 0)
    throw Error(Errc::InvalidArgument, "no embedding between these fields");
  const auto& mod = small_->spec().modulus;
  const Field& L = *large_;
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint32_t v = 0; v < L.order() && !found; ++v) {
    std::uint32_t acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = L.add(L.mul(acc, v), mod[i] % L.p());
    if (acc == 0) {
      root = v;
      found = true;
    }
  }
  if (!found) throw Error(Errc::Internal, "modulus of the subfield has no root in the extension");

  std::vector<std::uint32_t> powers(small_->n());
  std::uint32_t cur = 1;
  for (auto& pw : powers) {
    pw = cur;
    cur = L.mul(cur, root);
  }
  image_.resize(small_->order());
  for (std::uint32_t v = 0; v < small_->order(); ++v) {
    const auto c = small_->coefficients(v);
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      // prime-field scalars encode as themselves
      acc = L.add(acc, L.mul(c[i], powers[i]));
    }
    image_[v] = acc;
  }
}

Element Embedding::operator()(const Element& e) const {
  if (!e.field()->same_as(*small_)) throw Error(Errc::FieldMismatch, "element is not in the source field");
  return large_->element(map(e.value()));
}

}  // namespace zdspec::gf
