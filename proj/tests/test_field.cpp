/* Copyright 2026 The gsp4 Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <random>

#include "gsp4/field.hpp"

namespace gsp4 {
namespace {

std::int64_t order_by_multiplication(const Field& f, FieldElement x) {
  FieldElement y = x;
  std::int64_t n = 1;
  while (y != f.one(x.level)) {
    y = f.mul(y, x);
    ++n;
  }
  return n;
}

Field field_for(std::int64_t q) { return q == 9 ? Field::make(3, 2) : Field::make(static_cast<int>(q)); }

TEST(Field, GeneratorOrdersAtThree) {
  Field f = Field::make(3);
  EXPECT_EQ(f.q(), 3);
  EXPECT_EQ(order_by_multiplication(f, f.gamma()), 2);
  EXPECT_EQ(order_by_multiplication(f, f.eta()), 4);
  EXPECT_EQ(order_by_multiplication(f, f.theta()), 8);
  EXPECT_EQ(order_by_multiplication(f, f.zeta()), 10);
  EXPECT_EQ(order_by_multiplication(f, f.kappa()), 80);
}

TEST(Field, GeneratorOrdersAtFive) {
  Field f = Field::make(5);
  EXPECT_EQ(order_by_multiplication(f, f.gamma()), 4);
  EXPECT_EQ(order_by_multiplication(f, f.eta()), 6);
  EXPECT_EQ(order_by_multiplication(f, f.theta()), 24);
  EXPECT_EQ(order_by_multiplication(f, f.zeta()), 26);
}

TEST(Field, GeneratorOrdersAllSupportedQ) {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    Field f = field_for(q);
    ASSERT_EQ(f.q(), q);
    EXPECT_EQ(order_by_multiplication(f, f.gamma()), q - 1) << q;
    EXPECT_EQ(order_by_multiplication(f, f.eta()), q + 1) << q;
    EXPECT_EQ(order_by_multiplication(f, f.theta()), q * q - 1) << q;
    EXPECT_EQ(order_by_multiplication(f, f.zeta()), q * q + 1) << q;
    EXPECT_EQ(order_by_multiplication(f, f.kappa()), q * q * q * q - 1) << q;
  }
}

TEST(Field, GammaIsMinusOneInF3) {
  Field f = Field::make(3);
  EXPECT_EQ(f.gamma(), f.neg(f.one(Level::base)));
  EXPECT_EQ(f.mul(f.gamma(), f.gamma()), f.one(Level::base));
}

TEST(Field, NormOneGenerators) {
  for (std::int64_t q : {3, 5, 7, 9}) {
    Field f = field_for(q);
    EXPECT_EQ(f.mul(f.eta(), f.frobenius(f.eta())), f.one(Level::quadratic)) << q;
    // zeta^(q^2) * zeta = 1: norm from F_{q^4} to F_{q^2}
    EXPECT_EQ(f.mul(f.zeta(), f.pow(f.zeta(), q * q)), f.one(Level::quartic)) << q;
  }
}

TEST(Field, AdditiveInverses) {
  Field f = Field::make(3, 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    for (Level l : {Level::base, Level::quadratic, Level::quartic}) {
      auto x = f.element(l, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.unit_order(l))));
      EXPECT_TRUE(f.add(x, f.neg(x)).is_zero());
    }
  }
}

TEST(Field, Errors) {
  Field f = Field::make(5);
  EXPECT_THROW(Field::make(2), std::invalid_argument);
  EXPECT_THROW(Field::make(9), std::invalid_argument);
  EXPECT_ANY_THROW(f.inv(f.zero(Level::base)));
  EXPECT_ANY_THROW(f.add(f.gamma(), f.theta()));
  MultiplicativeCharacter chi{Level::base, 1};
  EXPECT_THROW(chi(f, f.zero(Level::base)), std::domain_error);
}

TEST(Field, EmbeddingIsARingHomomorphism) {
  for (std::int64_t q : {3, 5, 9}) {
    Field f = field_for(q);
    EXPECT_EQ(f.embed(f.gamma(), Level::quartic), f.pow(f.kappa(), f.index(Level::base)));
    for (std::int64_t a = 0; a < q - 1; ++a)
      for (std::int64_t b = 0; b < q - 1; ++b) {
        auto x = f.element(Level::base, a), y = f.element(Level::base, b);
        for (Level to : {Level::quadratic, Level::quartic}) {
          EXPECT_EQ(f.embed(f.mul(x, y), to), f.mul(f.embed(x, to), f.embed(y, to)));
          EXPECT_EQ(f.embed(f.add(x, y), to), f.add(f.embed(x, to), f.embed(y, to)));
        }
      }
  }
}

TEST(Field, FrobeniusFixesExactlyTheBaseField) {
  for (std::int64_t q : {3, 5, 7}) {
    Field f = field_for(q);
    for (Level l : {Level::quadratic, Level::quartic}) {
      std::int64_t fixed = 0;
      for (std::int64_t e = 0; e < f.unit_order(l); ++e) {
        auto x = f.element(l, e);
        bool fx = f.frobenius(x) == x;
        fixed += fx;
        EXPECT_EQ(fx, f.restrict_to(x, Level::base).has_value());
      }
      EXPECT_EQ(fixed, q - 1) << q;
    }
  }
}

TEST(Field, CharacterValues) {
  Field f = Field::make(5);
  MultiplicativeCharacter triv{Level::base, 0}, chi1{Level::base, 1};
  for (std::int64_t k = 0; k < 4; ++k) EXPECT_EQ(triv.at(f, k), Complex(1, 0));
  EXPECT_NEAR(std::abs(chi1(f, f.neg(f.one(Level::base))) - Complex(-1, 0)), 0.0, 1e-12);
  for (std::int64_t m = 0; m < 4; ++m) {
    MultiplicativeCharacter c{Level::base, m};
    EXPECT_NEAR(std::abs(c(f, f.neg(f.one(Level::base))) - Complex(m % 2 ? -1.0 : 1.0, 0)), 0.0, 1e-12);
    for (std::int64_t j = 0; j < 4; ++j)
      for (std::int64_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(c.at(f, j) * c.at(f, k) - c.at(f, j + k)), 0.0, 1e-12);
  }
}

TEST(Field, AdditiveCharacter) {
  Field f3 = Field::make(3);
  AdditiveCharacter psi{f3.one(Level::base)};
  Complex s = psi(f3, f3.zero(Level::base));
  for (std::int64_t e = 0; e < 2; ++e) s += psi(f3, f3.element(Level::base, e));
  EXPECT_NEAR(std::abs(s), 0.0, 1e-12);
  Field f = Field::make(3, 2);
  for (std::int64_t a = 0; a < 8; ++a) {
    AdditiveCharacter p{f.element(Level::base, a)};
    bool nontrivial = false;
    for (std::int64_t x = -1; x < 8; ++x)
      for (std::int64_t y = -1; y < 8; ++y) {
        auto u = x < 0 ? f.zero(Level::base) : f.element(Level::base, x);
        auto v = y < 0 ? f.zero(Level::base) : f.element(Level::base, y);
        EXPECT_NEAR(std::abs(p(f, f.add(u, v)) - p(f, u) * p(f, v)), 0.0, 1e-12);
        nontrivial = nontrivial || std::abs(p(f, u) - 1.0) > 1e-9;
      }
    EXPECT_TRUE(nontrivial);
  }
}

TEST(Field, IndexSetSizes) {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    EXPECT_EQ(static_cast<std::int64_t>(index_t1(q).size()), (q - 3) / 2);
    EXPECT_EQ(static_cast<std::int64_t>(index_t2(q).size()), (q - 1) / 2);
    EXPECT_EQ(static_cast<std::int64_t>(index_t3(q).size()), q - 1);
    EXPECT_EQ(static_cast<std::int64_t>(index_r1(q).size()), (q * q - 1) / 4);
    auto r2 = index_r2(q);
    EXPECT_EQ(static_cast<std::int64_t>(r2.size()), (q - 1) * (q - 1) / 4) << q;
    for (auto i : r2) EXPECT_TRUE(r2_admissible(q, i));
  }
}

TEST(Field, ConstructionIsDeterministic) {
  EXPECT_EQ(Field::make(5).modulus(), Field::make(5).modulus());
  EXPECT_EQ(Field::make(3, 2).modulus(), Field::make(3, 2).modulus());
}

}  // namespace
}  // namespace gsp4
