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
#include "zdspec/closedform.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <tuple>

#include "parallel.hpp"
#include "zdspec/error.hpp"
#include "zdspec/spectra.hpp"

namespace zdspec::closedform {

namespace {

struct Case {
  bool matches;
  std::optional<std::uint64_t> value;
  std::string_view label;
};

PredictionOutcome first_match(std::initializer_list<Case> cases, Case fallback) {
  PredictionOutcome out;
  bool found = false;
  for (const auto& c : cases) {
    if (!c.matches) continue;
    if (!found) {
      out.value = c.value;
      out.case_label = c.label;
      found = true;
    } else if (c.value != out.value) {
      out.conflict = true;
    }
  }
  if (!found) {
    out.value = fallback.value;
    out.case_label = fallback.label;
  }
  return out;
}

void require_char(bool ok, const char* what) {
  if (!ok) throw Error(Errc::Characteristic, what);
}

bool abab_zero(const Element& a, const Element& b) { return a.is_zero() || b.is_zero() || a == b; }

std::uint64_t order_of(const Element& e) { return e.field()->order(); }

constexpr std::string_view kTrivialChar2 = "ab(a+b)=0";
constexpr std::string_view kTrivialOdd = "ab=0";

}  // namespace

std::string_view id(Theorem t) {
  switch (t) {
    case Theorem::X7Char2: return "3.1";
    case Theorem::X2m1p3Char2: return "3.2";
    case Theorem::X5Odd: return "4.1";
    case Theorem::X7Char3: return "4.2";
    case Theorem::X7OddBound: return "x7-bound";
  }
  return "?";
}

std::string_view describe(Theorem t) {
  switch (t) {
    case Theorem::X7Char2: return "x^7 over F_{2^n}";
    case Theorem::X2m1p3Char2: return "x^(2^(m+1)+3) over F_{2^n}, n = 2m or 2m+1";
    case Theorem::X5Odd: return "x^5 over F_{p^n}, p odd, p != 5";
    case Theorem::X7Char3: return "x^7 over F_{3^n}";
    case Theorem::X7OddBound: return "x^7 over F_{p^n}, p > 3, p != 7 (uniformity <= 5)";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view s) {
  if (s == "3.1" || s == "x7-char2") return Theorem::X7Char2;
  if (s == "3.2" || s == "x2m1p3") return Theorem::X2m1p3Char2;
  if (s == "4.1" || s == "x5-odd") return Theorem::X5Odd;
  if (s == "4.2" || s == "x7-char3") return Theorem::X7Char3;
  if (s == "x7-bound") return Theorem::X7OddBound;
  return std::nullopt;
}

bool PredictorContext::traces_vanish() const {
  const Field& f = *c.field();
  return f.trace(omega1.value(), 1) == 0 && f.trace(omega2.value(), 1) == 0 && f.trace(omega3.value(), 1) == 0;
}

namespace {

PredictorContext finish_context(const Element& c, const Element& a0) {
  const Element a1 = c.square() + c;
  if (a1.is_zero()) throw Error(Errc::Internal, "c^2 + c vanished although ab(a+b) != 0");
  const Element a2 = a1 + c.field()->one();
  const Element scale = a0 / a1.square();
  const Element c1 = c + c.field()->one();
  return {c, a0, a1, a2, scale, scale * c.square(), scale * c1.square()};
}

Element ratio_char2(const Element& a, const Element& b) {
  gf::require_same_field(a, b);
  require_char(a.field()->p() == 2, "predictor requires characteristic 2");
  if (abab_zero(a, b)) throw Error(Errc::InvalidArgument, "context needs ab(a+b) != 0");
  return a / b;
}

}  // namespace

PredictorContext x7_context(const Element& a, const Element& b) {
  const Element c = ratio_char2(a, b);
  const Element a2 = c.square() + c + c.field()->one();
  return finish_context(c, a2.square());
}

std::uint32_t x2m1p3_m(std::uint32_t n) { return n / 2; }

std::uint64_t x2m1p3_exponent(std::uint32_t n) { return (std::uint64_t{1} << (x2m1p3_m(n) + 1)) + 3; }

PredictorContext x2m1p3_context(const Element& a, const Element& b) {
  const Element c = ratio_char2(a, b);
  const std::uint32_t n = c.field()->n();
  const auto m = static_cast<std::int64_t>(x2m1p3_m(n));
  const Element cm = c.frobenius(m);
  const Element cm1 = c.frobenius(m + 1);
  const Element c2 = c.square();
  const Element c4 = c2.square();
  Element a0 = c.field()->zero();
  if (n % 2 == 0) {
    const Element den = cm + c;
    if (den.is_zero()) throw Error(Errc::InvalidArgument, "a/b lies in F_{2^m}; the quartic reduction does not apply");
    a0 = ((cm + c2) / den).square().square() + (cm1 + c) * (c4 + c) / den.square();
  } else {
    const Element cm2 = c.frobenius(m + 2);
    const Element den1 = cm2 + c2;
    const Element den2 = cm1 + c2;
    if (den1.is_zero() || den2.is_zero()) throw Error(Errc::Internal, "vanishing denominator for n = 2m + 1");
    a0 = (cm + c2).square() * (cm1 + c2) / den1 + (cm1 + c) * (c4 + c) / den2;
  }
  return finish_context(c, a0);
}

PredictionOutcome predict_x7_char2(const Element& a, const Element& b) {
  gf::require_same_field(a, b);
  const Field& f = *a.field();
  require_char(f.p() == 2, "x^7 predictor applies in characteristic 2");
  if (abab_zero(a, b)) return {f.order(), kTrivialChar2};
  const auto ctx = x7_context(a, b);
  const bool traces = ctx.traces_vanish();
  if (f.n() % 2 == 0) {
    return first_match({{ctx.a2.is_zero(), 4, "a/b in {w, w+1}"}, {traces, 4, "omega traces vanish"}},
                       {true, 0, "otherwise"});
  }
  return first_match({{traces, 4, "omega traces vanish"}}, {true, 0, "otherwise"});
}

PredictionOutcome predict_x2m1p3(const Element& a, const Element& b) {
  gf::require_same_field(a, b);
  const Field& f = *a.field();
  require_char(f.p() == 2, "x^(2^(m+1)+3) predictor applies in characteristic 2");
  if (f.n() < 2) throw Error(Errc::Hypothesis, "x^(2^(m+1)+3) needs m >= 1");
  if (abab_zero(a, b)) return {f.order(), kTrivialChar2};
  const std::uint32_t m = x2m1p3_m(f.n());
  const Element c = a / b;
  // c^(2^m) = c; for n odd this forces c into F_2.
  const bool in_subfield = c.frobenius(m) == c;
  const bool traces = !in_subfield && x2m1p3_context(a, b).traces_vanish();
  if (f.n() % 2 == 0) {
    const bool cube_root = (c.square() + c + f.one()).is_zero();
    return first_match({{in_subfield, std::uint64_t{1} << m, "a/b in F_{2^m}"},
                        {cube_root, 4, "a/b in {w, w+1}"},
                        {traces, 4, "a/b outside F_{2^m}, omega traces vanish"}},
                       {true, 0, "otherwise"});
  }
  return first_match({{traces, 4, "a/b outside F_{2^m}, omega traces vanish"}}, {true, 0, "otherwise"});
}

PredictionOutcome predict_x5_oddp(const Element& a, const Element& b) {
  gf::require_same_field(a, b);
  const Field& f = *a.field();
  require_char(f.p() != 2, "x^5 predictor needs odd characteristic");
  if (f.p() == 5) throw Error(Errc::Hypothesis, "x^5 predictor excludes p = 5");
  if (a.is_zero() || b.is_zero()) return {order_of(a), kTrivialOdd};
  const int eta = gf::quadratic_character(-(a.square() + b.square()));
  return first_match({{eta == -1, 1, "eta(-(a^2+b^2)) = -1"}, {eta == 1, 3, "eta(-(a^2+b^2)) = 1"}},
                     {true, std::nullopt, "eta(-(a^2+b^2)) = 0"});
}

PredictionOutcome predict_x7_p3(const Element& a, const Element& b) {
  gf::require_same_field(a, b);
  const Field& f = *a.field();
  require_char(f.p() == 3, "x^7 predictor applies in characteristic 3");
  if (a.is_zero() || b.is_zero()) return {order_of(a), kTrivialOdd};
  const Element t = a.square() + b.square();
  const int eta_inv = t.is_zero() ? 0 : gf::quadratic_character(t.inv());
  if (f.n() % 2 == 1) {
    return first_match({{eta_inv == 1, 1, "eta(1/(a^2+b^2)) = 1"}, {eta_inv == -1, 3, "eta(1/(a^2+b^2)) = -1"}},
                       {true, std::nullopt, "no case applies"});
  }
  const bool one = (a != b && t.is_zero()) || (!t.is_zero() && eta_inv == -1);
  return first_match({{one, 1, "a^2+b^2 = 0 with a != b, or eta(1/(a^2+b^2)) = -1"},
                      {!t.is_zero() && eta_inv == 1, 3, "eta(1/(a^2+b^2)) = 1"}},
                     {true, std::nullopt, "no case applies"});
}

PredictionOutcome predict(Theorem t, const Element& a, const Element& b) {
  switch (t) {
    case Theorem::X7Char2: return predict_x7_char2(a, b);
    case Theorem::X2m1p3Char2: return predict_x2m1p3(a, b);
    case Theorem::X5Odd: return predict_x5_oddp(a, b);
    case Theorem::X7Char3: return predict_x7_p3(a, b);
    case Theorem::X7OddBound: break;
  }
  throw Error(Errc::Hypothesis, "x^7 for p > 3 has no entrywise predictor");
}

void check_hypotheses(Theorem t, const Field& f) {
  const auto fail = [&](const std::string& why) {
    throw Error(Errc::Hypothesis, std::string(id(t)) + ": " + why + " (field F_" + std::to_string(f.p()) + "^" +
                                      std::to_string(f.n()) + ")");
  };
  switch (t) {
    case Theorem::X7Char2:
      if (f.p() != 2) fail("p must be 2");
      if (f.n() < 2) fail("n must be at least 2");
      break;
    case Theorem::X2m1p3Char2:
      if (f.p() != 2) fail("p must be 2");
      if (x2m1p3_m(f.n()) < 2) fail("m = floor(n/2) must be at least 2");
      break;
    case Theorem::X5Odd:
      if (f.p() == 2) fail("p must be odd");
      if (f.p() == 5) fail("p must differ from 5");
      break;
    case Theorem::X7Char3:
      if (f.p() != 3) fail("p must be 3");
      break;
    case Theorem::X7OddBound:
      if (f.p() <= 3) fail("p must exceed 3");
      if (f.p() == 7) fail("p must differ from 7");
      break;
  }
}

std::uint64_t exponent(Theorem t, const Field& f) {
  switch (t) {
    case Theorem::X2m1p3Char2: return x2m1p3_exponent(f.n());
    case Theorem::X5Odd: return 5;
    case Theorem::X7Char2:
    case Theorem::X7Char3:
    case Theorem::X7OddBound: return 7;
  }
  return 0;
}

std::optional<std::uint64_t> stated_uniformity(Theorem t, const Field& f) {
  switch (t) {
    case Theorem::X7Char2:
      if (f.n() < 4) return std::nullopt;
      return 4;
    case Theorem::X2m1p3Char2:
      return f.n() % 2 == 0 ? (std::uint64_t{1} << x2m1p3_m(f.n())) : 4;
    case Theorem::X5Odd:
    case Theorem::X7Char3: return 3;
    case Theorem::X7OddBound: return std::nullopt;
  }
  return std::nullopt;
}

std::uint32_t bound_x7_oddp(const Field::Ptr& f, unsigned threads) {
  check_hypotheses(Theorem::X7OddBound, *f);
  return spectra::sozd_uniformity(spectra::Sbox::power(f, 7), threads).uniformity;
}

bool VerificationReport::passed() const {
  if (!mismatches.empty()) return false;
  if (expected_uniformity && uniformity != *expected_uniformity) return false;
  if (uniformity_bound && uniformity > *uniformity_bound) return false;
  return true;
}

nlohmann::ordered_json VerificationReport::to_json(const Field& f) const {
  using json = nlohmann::ordered_json;
  json j;
  j["theorem"] = std::string(id(theorem));
  j["field"] = json{{"p", field.p}, {"n", field.n}, {"modulus", field.modulus}};
  j["exponent"] = exponent;
  j["pairs_checked"] = pairs_checked;
  json mm = json::array();
  for (const auto& m : mismatches)
    mm.push_back(json{{"a", f.label(m.a)}, {"b", f.label(m.b)}, {"predicted", m.predicted}, {"actual", m.actual},
                      {"case", m.case_label}});
  j["mismatches"] = std::move(mm);
  json un = json::array();
  for (const auto& u : unpredicted)
    un.push_back(json{{"a", f.label(u.a)}, {"b", f.label(u.b)}, {"actual", u.actual}, {"case", u.case_label}});
  j["unpredicted"] = std::move(un);
  j["uniformity"] = uniformity;
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["expected_uniformity"] = expected_uniformity ? json(*expected_uniformity) : json(nullptr);
  j["uniformity_bound"] = uniformity_bound ? json(*uniformity_bound) : json(nullptr);
  j["sampled"] = sampled;
  j["case_counts"] = case_counts;
  j["conflicts"] = conflicts;
  j["notes"] = notes;
  j["passed"] = passed();
  return j;
}

VerificationReport verify_theorem(Theorem t, const Field::Ptr& fp, const VerifyOptions& opts) {
  const Field& f = *fp;
  check_hypotheses(t, f);

  VerificationReport rep;
  rep.theorem = t;
  rep.field = f.spec();
  rep.exponent = exponent(t, f);
  rep.expected_uniformity = stated_uniformity(t, f);
  if (t == Theorem::X7OddBound) rep.uniformity_bound = 5;

  if (t == Theorem::X7Char2 && f.n() < 4)
    rep.notes.push_back("n < 4: uniformity reported for information only");
  if (t == Theorem::X2m1p3Char2 && x2m1p3_m(f.n()) < 5)
    rep.notes.push_back("m < 5: below the range that motivated this exponent; checked as stated");
  if (t == Theorem::X2m1p3Char2 && f.n() % 2 == 1)
    rep.notes.push_back("n = 2m + 1: a/b outside F_{2^m} holds for every a/b outside F_2");

  const std::uint64_t q = f.order();
  const auto sbox = spectra::Sbox::power(fp, rep.exponent);
  const auto adm = spectra::admissible_for(spectra::TableKind::Sozd, f);

  // Pair list in canonical order (full) or drawn from the seeded generator.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  const bool full = opts.force_full || q * q * q <= opts.full_evaluation_limit;
  if (full) {
    pairs.reserve(q * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) pairs.emplace_back(a, b);
  } else {
    rep.sampled = true;
    rep.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    const std::uint64_t limit = (UINT64_MAX / q) * q;
    auto draw = [&]() {
      std::uint64_t v;
      do v = rng();
      while (v >= limit);
      return static_cast<std::uint32_t>(v % q);
    };
    pairs.reserve(opts.samples);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      const std::uint32_t a = draw();
      const std::uint32_t b = draw();
      pairs.emplace_back(a, b);
    }
  }
  rep.pairs_checked = pairs.size();

  std::vector<std::uint32_t> actual(pairs.size());
  std::vector<PredictionOutcome> predicted(pairs.size());
  const bool has_predictor = t != Theorem::X7OddBound;
  detail::parallel_for(pairs.size(), opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto [a, b] = pairs[i];
      actual[i] = spectra::sozd_entry(sbox, a, b);
      if (has_predictor) predicted[i] = predict(t, f.element(a), f.element(b));
    }
  });

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (spectra::is_admissible(f, adm, a, b)) rep.uniformity = std::max<std::uint64_t>(rep.uniformity, actual[i]);
    if (!has_predictor) continue;
    const auto& out = predicted[i];
    ++rep.case_counts[std::string(out.case_label)];
    if (out.conflict) ++rep.conflicts;
    if (!out.predicted()) {
      rep.unpredicted.push_back({a, b, actual[i], std::string(out.case_label)});
    } else if (*out.value != actual[i]) {
      rep.mismatches.push_back({a, b, *out.value, actual[i], std::string(out.case_label)});
    }
  }
  if (rep.sampled) {
    auto by_pair = [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); };
    std::stable_sort(rep.mismatches.begin(), rep.mismatches.end(), by_pair);
    std::stable_sort(rep.unpredicted.begin(), rep.unpredicted.end(), by_pair);
  }
  if (rep.conflicts)
    rep.notes.push_back(std::to_string(rep.conflicts) + " pairs matched more than one case with different values");
  return rep;
}

}  // namespace zdspec::closedform
