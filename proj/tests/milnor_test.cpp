// Copyright 2026 The resform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "resform/milnor.hpp"

#include <gtest/gtest.h>

#include <random>

namespace resform {
namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

TEST(DegreeBoundTest, Examples) {
  const Field f7 = Field::create(7, 1);
  EXPECT_EQ(degree_bound(parse_poly("x^3", f7, {"x"})), 2);
  EXPECT_EQ(degree_bound(parse_poly("x^2 + y^3", f7, kXY)), 2);
  EXPECT_EQ(degree_bound(parse_poly("x^2 + y^2", f7, kXY)), 1);
  EXPECT_EQ(degree_bound(parse_poly("x + y^2", f7, kXY)), 0);
  try {
    degree_bound(parse_poly("x^2*y", f7, kXY));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIsolated);
  }
}

TEST(MilnorAlgebraTest, Examples) {
  const Field f7 = Field::create(7, 1);
  const auto q = milnor_algebra(parse_poly("3*x^2 + 5*y^2 + z^2", f7, kXYZ));
  EXPECT_EQ(q.mu(), 1);
  EXPECT_EQ(q.basis(), (std::vector<Exponent>{{0, 0, 0}}));
  const auto c = milnor_algebra(parse_poly("x^3 + y^3", f7, kXY));
  EXPECT_EQ(c.mu(), 4);
  EXPECT_EQ(c.basis(), (std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  const GaloisRing z8 = GaloisRing::create(Field::create(2, 1));
  const auto w = milnor_algebra(parse_poly("u^2 + u^3", z8, {"u"}));
  EXPECT_EQ(w.mu(), 2);
  EXPECT_EQ(w.truncation(), 6);
  EXPECT_EQ(w.basis(), (std::vector<Exponent>{{0}, {1}}));
  EXPECT_EQ(w.normal_form(Exponent{2}), (std::vector<GaloisElem>{z8.zero(), z8.from_int(2)}));
}

TEST(MilnorAlgebraTest, NotIsolatedPropagates) {
  const Field f7 = Field::create(7, 1);
  try {
    milnor_algebra(parse_poly("x^2*y", f7, kXY));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIsolated);
  }
}

TEST(MilnorAlgebraTest, FermatMilnorNumbers) {
  for (int p : {7, 11}) {
    const Field k = Field::create(p, 1);
    for (int d = 2; d <= 5; ++d)
      for (int n = 1; n <= 3; ++n) {
        std::string text;
        for (int i = 0; i < n; ++i) text += (i ? " + " : "") + std::to_string(i + 2) + "*" + kXYZ[i] + "^" + std::to_string(d);
        const std::vector<std::string> names(kXYZ.begin(), kXYZ.begin() + n);
        const auto a = milnor_algebra(parse_poly(text, k, names));
        int expect = 1;
        for (int i = 0; i < n; ++i) expect *= d - 1;
        EXPECT_EQ(a.mu(), expect) << text << " over F_" << p;
      }
  }
}

TEST(MilnorAlgebraTest, SmoothPointHasZeroAlgebra) {
  const Field f5 = Field::create(5, 1);
  const auto a = milnor_algebra(parse_poly("x + x^3", f5, {"x"}));
  EXPECT_EQ(a.mu(), 0);
}

template <class R>
std::vector<typename R::Elem> random_vec(const R& ring, int mu, std::mt19937_64& rng) {
  std::vector<typename R::Elem> v;
  for (int i = 0; i < mu; ++i) v.push_back(ring.from_int(static_cast<long long>(rng() % 97)));
  return v;
}

TEST(MilnorAlgebraTest, NormalFormIdempotentAndMultiplicationLaws) {
  std::mt19937_64 rng(5);
  const Field f7 = Field::create(7, 1);
  for (const char* text : {"x^3 + y^4", "x^2*y + y^4", "x^3 + x*y^2 + y^5", "x^4 + y^4 + x^2*y^2"}) {
    const auto a = milnor_algebra(parse_poly(text, f7, kXY));
    for (std::size_t i = 0; i < a.basis().size(); ++i) {
      std::vector<FieldElem> unit(a.basis().size(), f7.zero());
      unit[i] = f7.one();
      EXPECT_EQ(a.normal_form(a.basis()[i]), unit);
    }
    for (int t = 0; t < 10; ++t) {
      const auto u = random_vec(f7, a.mu(), rng), v = random_vec(f7, a.mu(), rng), w = random_vec(f7, a.mu(), rng);
      EXPECT_EQ(a.multiply(u, v), a.multiply(v, u));
      EXPECT_EQ(a.multiply(a.multiply(u, v), w), a.multiply(u, a.multiply(v, w)));
      EXPECT_EQ(a.multiply(a.one(), u), u);
    }
  }
}

TEST(MilnorAlgebraTest, GaloisRingReducesToResidueAlgebra) {
  const Field f4 = Field::create(2, 2);
  const GaloisRing gr = GaloisRing::create(f4);
  for (const char* text : {"x^2 + x*y + [0,1]*y^2", "x^3 + y^3", "x^3 + x^2*y + y^3", "x^2 + x*y + y^3"}) {
    const auto fbar = parse_poly(text, f4, kXY);
    const auto lift = teichmuller_lift(gr, fbar);
    const auto a = milnor_algebra(lift);
    const auto abar = milnor_algebra(fbar);
    ASSERT_EQ(a.basis(), abar.basis()) << text;
    for (int v = 0; v < 2; ++v)
      for (int i = 0; i < a.mu(); ++i)
        for (int j = 0; j < a.mu(); ++j)
          EXPECT_EQ(gr.reduce(a.multiplication_matrix(v)[i][j]), abar.multiplication_matrix(v)[i][j]);
  }
}

TEST(MilnorAlgebraTest, EvenMilnorNumberInOddDimensionCharTwo) {
  std::mt19937_64 rng(13);
  int built = 0;
  for (int m : {1, 2}) {
    const Field k = Field::create(2, m);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = (trial % 2) ? 1 : 3;
      MultiPoly<Field> f(k, n);
      for (int t = 0; t < 5; ++t) {
        Exponent e(n, 0);
        int deg = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n && deg > 0; ++i) {
          const int take = (i == n - 1) ? deg : static_cast<int>(rng() % (deg + 1));
          e[i] = take;
          deg -= take;
        }
        f.add_term(e, FieldElem{static_cast<std::uint32_t>(1 + rng() % (k.q() - 1))});
      }
      if (f.degree() <= 0) continue;
      try {
        const auto a = milnor_algebra(f, 8);
        EXPECT_EQ(a.mu() % 2, 0) << render(f, std::vector<std::string>(kXYZ.begin(), kXYZ.begin() + n));
        ++built;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotIsolated);
      }
    }
  }
  EXPECT_GT(built, 20);
}

TEST(GlobalAlgebraTest, UnivariateQuotient) {
  const Field f7 = Field::create(7, 1);
  const auto a = milnor_algebra_global(parse_poly("x^4 + 2*x^2 + x", f7, {"x"}));
  EXPECT_EQ(a.mu(), 3);
  // x^3 = -(4x + 1)/4 modulo f' = 4x^3 + 4x + 1.
  const auto nf = a.normal_form(Exponent{3});
  EXPECT_EQ(nf, (std::vector<FieldElem>{f7.from_int(-2), f7.from_int(-1), f7.zero()}));
  const auto x5 = a.normal_form(Exponent{5});
  EXPECT_EQ(x5, a.multiply(a.normal_form(Exponent{2}), nf));
}

TEST(FamilyProfileTest, Cubic) {
  const Field f7 = Field::create(7, 1);
  const auto fam = parse_poly("x^3 + a*x^2", f7, {"x", "a"});
  const auto prof = family_milnor_profile(fam, {f7.zero(), f7.one()});
  ASSERT_EQ(prof.size(), 2U);
  ASSERT_EQ(prof[0].points.size(), 1U);
  EXPECT_TRUE(prof[0].points[0].at_origin);
  EXPECT_EQ(prof[0].points[0].multiplicity, 2);
  EXPECT_EQ(prof[0].total, 2);
  ASSERT_EQ(prof[1].points.size(), 2U);
  EXPECT_EQ(prof[1].total, 2);
  std::vector<std::uint32_t> roots;
  for (const auto& pt : prof[1].points) {
    EXPECT_EQ(pt.degree, 1);
    EXPECT_EQ(pt.multiplicity, 1);
    roots.push_back(f7.neg(pt.factor[0]).v);
  }
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<std::uint32_t>{0, 4}));
}

TEST(FamilyProfileTest, QuinticAndQuadratic) {
  const Field f7 = Field::create(7, 1);
  const auto quintic = family_milnor_profile(parse_poly("x^5 + a*x^3", f7, {"x", "a"}), {f7.zero(), f7.one()});
  EXPECT_EQ(quintic[0].total, 4);
  EXPECT_EQ(quintic[1].total, 4);
  const Field f9 = Field::create(3, 2);
  const auto quad = family_milnor_profile(parse_poly("x^2", f9, {"x", "a"}), f9.elements());
  for (const auto& pr : quad) EXPECT_EQ(pr.total, 1);
  try {
    family_milnor_profile(parse_poly("x^7 + a", f7, {"x", "a"}), {f7.one()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateFiber);
  }
}

}  // namespace
}  // namespace resform
