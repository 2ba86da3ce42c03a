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

#include "resform/gfield.hpp"

#include <gtest/gtest.h>

#include <set>

namespace resform {
namespace {

TEST(FieldTest, DefaultModuli) {
  EXPECT_EQ(Field::default_modulus(2, 2), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(Field::default_modulus(2, 3), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(Field::default_modulus(3, 2), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(Field::default_modulus(2, 4), (std::vector<int>{1, 1, 0, 0, 1}));
}

TEST(FieldTest, F4Generator) {
  const Field k = Field::create(2, 2, std::vector<int>{1, 1, 1});
  const FieldElem w = k.generator();
  EXPECT_EQ(k.mul(w, w), k.add(w, k.one()));
  EXPECT_EQ(k.q(), 4U);
}

TEST(FieldTest, PrimeField) {
  const Field k = Field::create(3, 1);
  EXPECT_EQ(k.q(), 3U);
  EXPECT_EQ(k.add(k.from_int(2), k.from_int(2)), k.from_int(1));
  EXPECT_EQ(k.inv(k.from_int(2)), k.from_int(2));
}

TEST(FieldTest, ReducibleModulusRejected) {
  try {
    Field::create(2, 2, std::vector<int>{1, 0, 1});
    FAIL() << "expected ReducibleModulus";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReducibleModulus);
  }
}

TEST(FieldTest, UnsupportedPrime) {
  EXPECT_THROW(Field::create(53, 1), Error);
  EXPECT_THROW(Field::create(4, 1), Error);
  EXPECT_NO_THROW(Field::create(47, 2));
  try {
    Field::create(53, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedPrime);
  }
}

TEST(FieldTest, Traces) {
  const Field f4 = Field::create(2, 2);
  EXPECT_EQ(f4.trace(f4.generator()), f4.one());
  EXPECT_EQ(f4.trace(f4.one()), f4.zero());
  const Field f9 = Field::create(3, 2);
  const FieldElem i = f9.generator();
  EXPECT_EQ(f9.mul(i, i), f9.from_int(-1));
  EXPECT_EQ(f9.trace(i), f9.zero());
}

TEST(FieldTest, FieldAxiomsExhaustive) {
  for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    const Field k = Field::create(p, m);
    const auto els = k.elements();
    for (FieldElem a : els) {
      EXPECT_EQ(k.add(a, k.neg(a)), k.zero());
      if (!k.is_zero(a)) {
        EXPECT_EQ(k.mul(a, k.inv(a)), k.one());
      }
      for (FieldElem b : els) {
        EXPECT_EQ(k.mul(a, b), k.mul(b, a));
        for (FieldElem c : {k.generator(), k.from_int(2)})
          EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
      }
    }
  }
}

TEST(FieldTest, FrobeniusFixesExactlyPrimeField) {
  for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const Field k = Field::create(p, m);
    int fixed = 0;
    for (FieldElem a : k.elements()) {
      if (k.frobenius(a) == a) ++fixed;
      for (FieldElem b : {k.generator(), k.primitive_element()}) {
        EXPECT_EQ(k.frobenius(k.add(a, b)), k.add(k.frobenius(a), k.frobenius(b)));
        EXPECT_EQ(k.frobenius(k.mul(a, b)), k.mul(k.frobenius(a), k.frobenius(b)));
      }
    }
    EXPECT_EQ(fixed, p) << "q = " << k.q();
  }
}

TEST(FieldTest, TraceLandsInPrimeField) {
  const Field k = Field::create(5, 2);
  for (FieldElem a : k.elements()) EXPECT_TRUE(k.in_prime_field(k.trace(a)));
}

// Oracle: the set of nonzero squares, by enumeration.
std::set<std::uint32_t> squares(const Field& k) {
  std::set<std::uint32_t> s;
  for (FieldElem a : k.elements())
    if (!k.is_zero(a)) s.insert(k.mul(a, a).v);
  return s;
}

TEST(LegendreTest, Examples) {
  const Field f7 = Field::create(7, 1);
  EXPECT_EQ(legendre(f7, f7.from_int(2)), 1);
  EXPECT_EQ(legendre(f7, f7.one()), 1);
  const Field f13 = Field::create(13, 1);
  EXPECT_EQ(legendre(f13, f13.from_int(5)), -1);
  EXPECT_EQ(legendre(f13, f13.zero()), 0);
  try {
    legendre(Field::create(2, 1), FieldElem{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvenCharacteristic);
  }
}

TEST(LegendreTest, MatchesSquareEnumerationAndIsMultiplicative) {
  for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {5, 2}, {7, 2}, {11, 1}, {13, 1}}) {
    const Field k = Field::create(p, m);
    const auto sq = squares(k);
    for (FieldElem a : k.elements()) {
      if (k.is_zero(a)) continue;
      EXPECT_EQ(legendre(k, a), sq.count(a.v) ? 1 : -1);
      for (FieldElem b : k.elements()) {
        if (k.is_zero(b)) continue;
        EXPECT_EQ(legendre(k, k.mul(a, b)), legendre(k, a) * legendre(k, b));
      }
    }
  }
}

TEST(WpClassTest, Examples) {
  const Field f2 = Field::create(2, 1);
  auto c0 = wp_class(f2, f2.zero());
  EXPECT_EQ(c0.trace_bit, 0);
  ASSERT_TRUE(c0.solution.has_value());
  auto c1 = wp_class(f2, f2.one());
  EXPECT_EQ(c1.trace_bit, 1);
  EXPECT_FALSE(c1.solution.has_value());
  const Field f4 = Field::create(2, 2);
  auto c = wp_class(f4, f4.one());
  EXPECT_EQ(c.trace_bit, 0);
  ASSERT_TRUE(c.solution.has_value());
  const FieldElem y = *c.solution;
  EXPECT_EQ(f4.add(f4.mul(y, y), y), f4.one());
  EXPECT_THROW(wp_class(Field::create(3, 1), FieldElem{1}), Error);
}

TEST(WpClassTest, InvariantUnderArtinSchreierShifts) {
  for (int m : {1, 2, 3, 4}) {
    const Field k = Field::create(2, m);
    for (FieldElem a : k.elements())
      for (FieldElem y : k.elements()) {
        const FieldElem shifted = k.add(a, k.add(k.mul(y, y), y));
        EXPECT_EQ(wp_class(k, shifted).trace_bit, wp_class(k, a).trace_bit);
      }
  }
}

TEST(CycloIntTest, RingLaws) {
  const CycloInt z = CycloInt::zeta_pow(5, 1);
  EXPECT_EQ(z.pow(5), CycloInt::from_int(5, 1));
  CycloInt sum(5);
  for (int i = 0; i < 5; ++i) sum = sum + CycloInt::zeta_pow(5, i);
  EXPECT_EQ(sum, CycloInt::from_int(5, 0));
  const CycloInt a = CycloInt::from_coeffs(5, {1, 2, 0, -3});
  const CycloInt b = CycloInt::from_coeffs(5, {0, 1, 4, 1});
  const CycloInt c = CycloInt::from_coeffs(5, {2, 0, 1, 1});
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  EXPECT_EQ(CycloInt::zeta_pow(2, 1), CycloInt::from_int(2, -1));
}

TEST(GaussSumTest, F3Value) {
  const Field k = Field::create(3, 1);
  const CycloInt tau = gauss_sum(k);
  EXPECT_EQ(tau, CycloInt::from_coeffs(3, {-1, -2}));
  EXPECT_EQ(tau * tau, CycloInt::from_int(3, -3));
}

TEST(GaussSumTest, SquaresF5F7) {
  const Field f5 = Field::create(5, 1);
  EXPECT_EQ(gauss_sum(f5).pow(2), CycloInt::from_int(5, 5));
  const Field f7 = Field::create(7, 1);
  EXPECT_EQ(gauss_sum(f7).pow(2), CycloInt::from_int(7, -7));
  EXPECT_THROW(gauss_sum(Field::create(2, 2)), Error);
}

// Oracle: tau = -sum_{a != 0} leg(a) psi(a), a different summation.
CycloInt gauss_sum_by_characters(const Field& k, int twist) {
  CycloInt s(k.p());
  for (FieldElem a : k.elements()) {
    if (k.is_zero(a)) continue;
    s = s - additive_character(k, a, twist).scaled(legendre(k, a));
  }
  return s;
}

TEST(GaussSumTest, AgreesWithCharacterSumAllSmallFields) {
  for (int p : {3, 5, 7, 11, 13})
    for (int m = 1; m <= 3; ++m) {
      const Field k = Field::create(p, m);
      for (int c = 1; c < p; ++c) {
        const CycloInt tau = gauss_sum(k, c);
        EXPECT_EQ(tau, gauss_sum_by_characters(k, c)) << "p=" << p << " m=" << m << " c=" << c;
        EXPECT_EQ(tau * tau,
                  CycloInt::from_int(p, legendre(k, k.from_int(-1)) * static_cast<std::int64_t>(k.q())));
      }
    }
}

}  // namespace
}  // namespace resform
