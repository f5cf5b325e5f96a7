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
#include <gtest/gtest.h>

#include <random>

#include "zdspec/closedform.hpp"
#include "zdspec/equations.hpp"
#include "zdspec/error.hpp"
#include "zdspec/spectra.hpp"

using namespace zdspec;
using namespace zdspec::closedform;
using gf::Field;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

VerificationReport run(Theorem t, std::uint32_t p, std::uint32_t n, VerifyOptions o = {}) {
  return verify_theorem(t, Field::canonical(p, n), o);
}

}  // namespace

TEST(Predictors, TrivialCases) {
  auto f16 = Field::canonical(2, 4);
  const auto b = f16->element(7);
  EXPECT_EQ(predict_x7_char2(f16->zero(), b).value, 16u);
  EXPECT_EQ(predict_x7_char2(b, b).value, 16u);
  EXPECT_EQ(predict_x2m1p3(b, f16->zero()).value, 16u);

  auto f9 = Field::canonical(3, 2);
  EXPECT_EQ(predict_x5_oddp(f9->zero(), f9->one()).value, 9u);
  EXPECT_EQ(predict_x7_p3(f9->one(), f9->zero()).value, 9u);
}

TEST(Predictors, CubeRootOfUnityRatio) {
  for (std::uint32_t n : {4u, 6u, 8u}) {
    auto f = Field::canonical(2, n);
    for (std::uint32_t w = 2; w < f->order(); ++w) {
      const auto e = f->element(w);
      if (!(e.square() + e + f->one()).is_zero()) continue;
      for (std::uint32_t bv : {1u, 5u, 9u}) {
        const auto b = f->element(bv);
        EXPECT_EQ(predict_x7_char2(b * e, b).value, 4u);
      }
    }
  }
}

TEST(Predictors, SubfieldRatioGivesTwoToTheM) {
  auto f = Field::canonical(2, 6);
  gf::SubfieldMap f8(f, 3);
  for (auto c : f8.elements()) {
    if (c < 2) continue;
    const auto b = f->element(11);
    EXPECT_EQ(predict_x2m1p3(f->element(c) * b, b).value, 8u);
  }
}

TEST(Predictors, OddCharacteristicCases) {
  for (std::uint32_t n : {1u, 3u}) {
    auto f = Field::canonical(3, n);
    for (std::uint32_t a = 1; a < f->order(); ++a)
      EXPECT_EQ(predict_x5_oddp(f->element(a), f->element(a)).value, 3u);
  }
  auto f9 = Field::canonical(3, 2);
  int seen = 0;
  for (std::uint32_t a = 1; a < 9; ++a)
    for (std::uint32_t b = 1; b < 9; ++b) {
      const auto ea = f9->element(a), eb = f9->element(b);
      if (a != b && (ea.square() + eb.square()).is_zero()) {
        EXPECT_EQ(predict_x7_p3(ea, eb).value, 1u);
        ++seen;
      }
    }
  EXPECT_GT(seen, 0);
}

TEST(Predictors, CharacterOfInverse) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {3, 3}, {7, 2}}) {
    auto f = Field::canonical(p, n);
    for (std::uint32_t t = 1; t < f->order(); ++t)
      ASSERT_EQ(gf::quadratic_character(f->element(t).inv()), gf::quadratic_character(f->element(t)));
  }
}

TEST(Predictors, DependOnlyOnTheRatio) {
  std::mt19937_64 rng(5);
  for (auto [t, p, n] : std::vector<std::tuple<Theorem, std::uint32_t, std::uint32_t>>{
           {Theorem::X7Char2, 2, 6}, {Theorem::X2m1p3Char2, 2, 6}, {Theorem::X2m1p3Char2, 2, 7},
           {Theorem::X5Odd, 7, 2}, {Theorem::X7Char3, 3, 4}}) {
    auto f = Field::canonical(p, n);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
    for (int i = 0; i < 300; ++i) {
      const auto a = f->element(pick(rng)), b = f->element(pick(rng)), c = f->element(1 + pick(rng) % (f->order() - 1));
      const auto x = predict(t, a, b), y = predict(t, c * a, c * b);
      ASSERT_EQ(x.value, y.value);
      ASSERT_EQ(x.case_label, y.case_label);
    }
  }
}

TEST(Predictors, X7TraceCaseAgreesWithQuarticClassifier) {
  for (std::uint32_t n : {4u, 5u, 6u, 7u}) {
    auto f = Field::canonical(2, n);
    const auto b = f->one();
    for (std::uint32_t cv = 2; cv < f->order(); ++cv) {
      const auto a = f->element(cv);
      const auto ctx = x7_context(a, b);
      if (ctx.a2.is_zero()) continue;  // a0 = 0: not a quartic the lemma covers
      const auto cls = equations::classify_quartic({ctx.a2, ctx.a1, ctx.a0});
      if (ctx.traces_vanish())
        ASSERT_EQ(cls.shape, equations::FactorShape::Quartic1111);
      else
        ASSERT_NE(cls.shape, equations::FactorShape::Quartic1111);
    }
  }
}

TEST(Hypotheses, Rejected) {
  EXPECT_EQ(code_of([] { run(Theorem::X5Odd, 2, 6); }), Errc::Hypothesis);
  EXPECT_EQ(code_of([] { run(Theorem::X5Odd, 5, 2); }), Errc::Hypothesis);
  EXPECT_EQ(code_of([] { run(Theorem::X7Char2, 3, 2); }), Errc::Hypothesis);
  EXPECT_EQ(code_of([] { run(Theorem::X7Char3, 5, 1); }), Errc::Hypothesis);
  EXPECT_EQ(code_of([] { run(Theorem::X2m1p3Char2, 2, 3); }), Errc::Hypothesis);
  EXPECT_EQ(code_of([] { run(Theorem::X7OddBound, 7, 1); }), Errc::Hypothesis);
  EXPECT_EQ(parse_theorem("3.1"), Theorem::X7Char2);
  EXPECT_EQ(parse_theorem("x2m1p3"), Theorem::X2m1p3Char2);
  EXPECT_FALSE(parse_theorem("5.5"));
  EXPECT_EQ(x2m1p3_exponent(6), 19u);
  EXPECT_EQ(x2m1p3_exponent(5), 11u);
  EXPECT_EQ(x2m1p3_exponent(10), 67u);
}

TEST(Verify, X7CharTwoEvenAndOdd) {
  for (std::uint32_t n : {4u, 6u, 7u}) {
    const auto r = run(Theorem::X7Char2, 2, n);
    EXPECT_TRUE(r.mismatches.empty()) << n;
    EXPECT_EQ(r.uniformity, 4u) << n;
    EXPECT_EQ(r.pairs_checked, std::uint64_t{1} << (2 * n));
    EXPECT_FALSE(r.sampled);
  }
  // x^7 is APN on F_32: every admissible entry is 0, so the predictor agrees
  // entrywise but the stated uniformity 4 is not reached.
  const auto r5 = run(Theorem::X7Char2, 2, 5);
  EXPECT_TRUE(r5.mismatches.empty());
  EXPECT_EQ(r5.uniformity, 0u);
  EXPECT_FALSE(r5.passed());
}

TEST(Verify, X2m1p3TraceBranchOverpredicts) {
  const auto r = run(Theorem::X2m1p3Char2, 2, 6);
  EXPECT_EQ(r.uniformity, 8u);
  EXPECT_EQ(r.exponent, 19u);
  EXPECT_FALSE(r.mismatches.empty());
  // Every disagreement is the trace branch claiming 4 where no solution exists.
  for (const auto& m : r.mismatches) {
    ASSERT_EQ(m.predicted, 4u);
    ASSERT_EQ(m.actual, 0u);
  }
  EXPECT_EQ(r.case_counts.at("a/b in F_{2^m}"), 6u * 63u);
}

TEST(Verify, OddCharacteristic) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 3}, {3, 4}, {7, 2}}) {
    const auto r = run(Theorem::X5Odd, p, n);
    EXPECT_TRUE(r.passed()) << p << "^" << n;
    EXPECT_EQ(r.uniformity, 3u);
    for (const auto& u : r.unpredicted) EXPECT_EQ(u.case_label, "eta(-(a^2+b^2)) = 0");
  }
  // -1 is a square in F_81, so some entries fall outside the stated cases.
  EXPECT_FALSE(run(Theorem::X5Odd, 3, 4).unpredicted.empty());
  EXPECT_TRUE(run(Theorem::X5Odd, 3, 3).unpredicted.empty());
  for (std::uint32_t n : {2u, 3u, 4u}) {
    const auto r = run(Theorem::X7Char3, 3, n);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.uniformity, 3u);
    EXPECT_TRUE(r.unpredicted.empty());
  }
  const auto b = run(Theorem::X7OddBound, 11, 1);
  EXPECT_TRUE(b.passed());
  EXPECT_LE(b.uniformity, 5u);
}

TEST(Verify, SamplingIsSeededAndReproducible) {
  VerifyOptions o;
  o.samples = 300;
  o.seed = 42;
  const auto f = Field::canonical(2, 10);
  const auto r1 = verify_theorem(Theorem::X7Char2, f, o);
  const auto r2 = verify_theorem(Theorem::X7Char2, f, o);
  EXPECT_TRUE(r1.sampled);
  EXPECT_EQ(r1.pairs_checked, 300u);
  EXPECT_EQ(r1.seed, 42u);
  EXPECT_EQ(r1.to_json(*f).dump(), r2.to_json(*f).dump());
  o.threads = 3;
  EXPECT_EQ(verify_theorem(Theorem::X7Char2, f, o).to_json(*f).dump(), r1.to_json(*f).dump());
  o.seed = 43;
  EXPECT_NE(verify_theorem(Theorem::X7Char2, f, o).to_json(*f).dump(), r1.to_json(*f).dump());
}

TEST(Verify, ReportJsonLayout) {
  const auto f = Field::canonical(3, 2);
  const auto j = verify_theorem(Theorem::X5Odd, f).to_json(*f);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  ASSERT_GE(keys.size(), 5u);
  EXPECT_EQ(keys[0], "theorem");
  EXPECT_EQ(keys[1], "field");
  EXPECT_EQ(j["theorem"], "4.1");
  EXPECT_EQ(j["passed"], true);
}
