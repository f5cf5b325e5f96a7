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

#include "oracles.hpp"
#include "zdspec/equations.hpp"
#include "zdspec/error.hpp"

using namespace zdspec;
using namespace zdspec::equations;
using gf::Field;

namespace {

std::vector<std::uint32_t> values(const std::vector<Element>& v) {
  std::vector<std::uint32_t> out;
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

}  // namespace

TEST(Quadratic, Examples) {
  auto f8 = Field::canonical(2, 3);
  EXPECT_EQ(values(solve_quadratic_char2({f8->one(), f8->zero(), f8->one()})), (std::vector<std::uint32_t>{1}));
  for (std::uint32_t n = 1; n <= 6; ++n) {
    auto f = Field::canonical(2, n);
    EXPECT_EQ(values(solve_quadratic_char2({f->one(), f->one(), f->zero()})), (std::vector<std::uint32_t>{0, 1}));
    for (std::uint32_t c = 0; c < f->order(); ++c)
      if (f->trace(c, 1) == 1) {
        EXPECT_TRUE(solve_quadratic_char2({f->one(), f->one(), f->element(c)}).empty());
      }
  }
  auto f9 = Field::canonical(3, 2);
  EXPECT_THROW(solve_quadratic_char2({f9->one(), f9->one(), f9->one()}), Error);
  EXPECT_THROW(solve_quadratic_char2({f8->zero(), f8->one(), f8->one()}), Error);
}

TEST(Quadratic, TrichotomyAndBruteForce) {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    auto f = Field::canonical(2, n);
    const std::uint32_t q = f->order();
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto roots = values(solve_quadratic_char2({f->element(a), f->element(b), f->element(c)}));
          const std::vector<std::uint32_t> poly{c, b, a};
          ASSERT_EQ(roots, brute_roots(*f, poly));
          std::size_t expected = 1;
          if (b) {
            const auto beta = f->div(f->mul(a, c), f->mul(b, b));
            expected = f->trace(beta, 1) == 0 ? 2 : 0;
          }
          ASSERT_EQ(roots.size(), expected);
        }
  }
}

TEST(ArtinSchreier, SolutionsSatisfyEquation) {
  for (std::uint32_t n = 1; n <= 9; ++n) {
    auto f = Field::canonical(2, n);
    for (std::uint32_t beta = 0; beta < f->order(); ++beta) {
      const auto ys = solve_artin_schreier(f->element(beta));
      ASSERT_EQ(ys.size(), f->trace(beta, 1) == 0 ? 2u : 0u);
      for (const auto& y : ys) ASSERT_EQ((y.square() + y).value(), beta);
    }
  }
}

TEST(Trinomial, Examples) {
  auto f64 = Field::canonical(2, 6);
  const TrinomialEq zero{3, f64->zero()};
  EXPECT_EQ(trinomial_params(zero).d, 3u);
  EXPECT_EQ(trinomial_params(zero).l, 2u);
  gf::SubfieldMap f8(f64, 3);
  EXPECT_EQ(values(solve_trinomial(zero)), f8.elements());
  for (auto B : f8.elements()) {
    const auto roots = solve_trinomial({3, f64->element(B)});
    ASSERT_EQ(roots.size(), 8u);
    for (const auto& z : roots) ASSERT_EQ((z.frobenius(3) + z).value(), B);
  }
  EXPECT_THROW(trinomial_params({0, f64->one()}), Error);
  EXPECT_THROW(trinomial_params({6, f64->one()}), Error);
}

TEST(Trinomial, AgreesWithLinearAlgebraAndBruteForce) {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    auto f = Field::canonical(2, n);
    for (std::uint32_t k = 1; k < n; ++k) {
      const std::uint32_t d = std::gcd(k, n);
      for (std::uint32_t B = 0; B < f->order(); B += (n > 6 ? 7 : 1)) {
        const auto roots = values(solve_trinomial({k, f->element(B)}));
        ASSERT_EQ(roots, oracle::linear_trinomial_roots(*f, k, B)) << "n=" << n << " k=" << k << " B=" << B;
        std::vector<std::uint32_t> poly((std::size_t{1} << k) + 1, 0);
        poly[0] = B;
        poly[1] = 1;
        poly.back() = 1;
        ASSERT_EQ(roots, brute_roots(*f, poly));
        ASSERT_TRUE(roots.empty() || roots.size() == (std::size_t{1} << d));
        ASSERT_EQ(roots.empty(), f->trace(B, d) != 0);
      }
    }
  }
}

TEST(Cubic, Examples) {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    auto f = Field::canonical(2, n);
    for (std::uint32_t c = 2; c < f->order(); ++c) {
      const auto e = f->element(c);
      const auto cls = classify_cubic(e.square() + e + f->one(), e.square() + e);
      ASSERT_EQ(cls.shape, FactorShape::Cubic111);
      std::vector<std::uint32_t> want{1, c, c ^ 1u};
      std::sort(want.begin(), want.end());
      ASSERT_EQ(values(cls.roots), want);
    }
  }
  auto f4 = Field::canonical(2, 2);
  EXPECT_EQ(classify_cubic(f4->zero(), f4->one()).shape, FactorShape::Cubic111);
  auto f8 = Field::canonical(2, 3);
  EXPECT_EQ(classify_cubic(f8->zero(), f8->one()).shape, FactorShape::Cubic12);
}

TEST(Cubic, AgreesWithExtensionOracle) {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    auto f = Field::canonical(2, n);
    oracle::ExtensionRootCounter rc(f);
    for (std::uint32_t a2 = 0; a2 < f->order(); ++a2)
      for (std::uint32_t a1 = 1; a1 < f->order(); ++a1) {
        // The oracle counts distinct roots; skip cubics with a root r of the derivative, r^2 = a2.
        const std::vector<std::uint32_t> poly{a1, a2, 0, 1};
        bool repeated = false;
        for (auto r : brute_roots(*f, poly))
          if (f->add(f->mul(r, r), a2) == 0) repeated = true;
        if (repeated) continue;
        ASSERT_EQ(classify_cubic(f->element(a2), f->element(a1)).shape, oracle::cubic_shape(rc, a2, a1))
            << "n=" << n << " a2=" << a2 << " a1=" << a1;
      }
  }
}

TEST(Quartic, ExamplesAndErrors) {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    auto f = Field::canonical(2, n);
    for (std::uint32_t c = 2; c < f->order(); ++c) {
      const std::vector<std::uint32_t> poly{0, f->add(f->mul(c, c), c), f->add(f->add(f->mul(c, c), c), 1), 0, 1};
      std::vector<std::uint32_t> want{0, 1, c, c ^ 1u};
      std::sort(want.begin(), want.end());
      ASSERT_EQ(brute_roots(*f, poly), want);
    }
  }
  auto f4 = Field::canonical(2, 2);
  EXPECT_EQ(brute_roots(*f4, std::vector<std::uint32_t>{0, 1, 1}), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_TRUE(brute_roots(*f4, std::vector<std::uint32_t>{1}).empty());
  EXPECT_THROW(classify_quartic({f4->one(), f4->zero(), f4->one()}), Error);
  EXPECT_THROW(classify_quartic({f4->one(), f4->one(), f4->zero()}), Error);
}

TEST(Quartic, AgreesWithFactorShapeOracle) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    auto f = Field::canonical(2, n);
    oracle::ExtensionRootCounter rc(f);
    for (std::uint32_t a2 = 0; a2 < f->order(); ++a2)
      for (std::uint32_t a1 = 1; a1 < f->order(); ++a1)
        for (std::uint32_t a0 = 1; a0 < f->order(); ++a0) {
          const auto cls = classify_quartic({f->element(a2), f->element(a1), f->element(a0)});
          ASSERT_EQ(cls.shape, oracle::quartic_shape(rc, a2, a1, a0)) << "rule " << cls.rule;
          ASSERT_EQ(cls.roots.size(), linear_factors(cls.shape));
          const std::vector<std::uint32_t> poly{a0, a1, a2, 0, 1};
          ASSERT_EQ(values(cls.roots), brute_roots(*f, poly));
          if (cls.shape == FactorShape::Quartic13) {
            ASSERT_EQ(cls.cubic_shape, FactorShape::Cubic3);
          }
          if (cls.shape == FactorShape::Quartic1111) {
            ASSERT_EQ(cls.cubic_shape, FactorShape::Cubic111);
            for (int t : cls.omega_traces) ASSERT_EQ(t, 0);
          }
        }
  }
}
