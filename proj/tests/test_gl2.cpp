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

#include <map>

#include "gsp4/gl2.hpp"
#include "gsp4/group.hpp"

namespace gsp4 {
namespace {

class Gl2 : public ::testing::TestWithParam<int> {};

// Brute force over the elements of GL(2, F_q).
TEST_P(Gl2, CharactersAreOrthonormal) {
  const int q = GetParam();
  Gsp4 G(q);
  Gl2Classifier classify(G.arith());
  auto elems = G.gl2_elements();
  ASSERT_EQ(static_cast<std::int64_t>(elems.size()), (q * q - 1) * (q * q - q));
  std::map<Gl2ClassDatum, std::size_t> count;
  for (const auto& g : elems) ++count[classify(g)];
  EXPECT_EQ(static_cast<std::int64_t>(count.size()), q * q - 1);
  auto irr = gl2_irreducibles(q);
  ASSERT_EQ(static_cast<std::int64_t>(irr.size()), q * q - 1);
  std::int64_t sq = 0;
  for (const auto& pi : irr) sq += pi.degree(q) * pi.degree(q);
  EXPECT_EQ(sq, static_cast<std::int64_t>(elems.size()));
  const double n = static_cast<double>(elems.size());
  for (std::size_t a = 0; a < irr.size(); ++a) {
    EXPECT_NEAR(gl2_char_value(q, irr[a], Gl2ClassDatum::scalar(q, 0)).real(), static_cast<double>(irr[a].degree(q)),
                1e-9);
    for (std::size_t b = a; b < irr.size(); ++b) {
      Complex s = 0;
      for (const auto& [d, k] : count)
        s += static_cast<double>(k) * gl2_char_value(q, irr[a], d) * std::conj(gl2_char_value(q, irr[b], d));
      EXPECT_NEAR(std::abs(s / n - Complex(a == b ? 1.0 : 0.0, 0)), 0.0, 1e-9) << irr[a].str() << " " << irr[b].str();
    }
  }
}

TEST_P(Gl2, ClassifierIsAConjugacyInvariant) {
  const int q = GetParam();
  Gsp4 G(q);
  const FqArith& A = G.arith();
  Gl2Classifier classify(A);
  auto elems = G.gl2_elements();
  for (std::size_t i = 0; i < elems.size(); i += 3) {
    const Mat2& x = elems[i];
    const Mat2& g = elems[(i * 7 + 1) % elems.size()];
    EXPECT_EQ(classify(mul(A, mul(A, g, x), inverse(A, g))), classify(x));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallQ, Gl2, ::testing::Values(3, 5, 7));

TEST(Gl2Character, Normalization) {
  EXPECT_EQ(Gl2Character::principal(5, 3, 1), Gl2Character::principal(5, 1, 3));
  EXPECT_THROW(Gl2Character::principal(5, 2, 2), std::invalid_argument);
  EXPECT_THROW(Gl2Character::cuspidal(5, 6), std::invalid_argument);
  EXPECT_EQ(Gl2Character::cuspidal(5, 1), Gl2Character::cuspidal(5, 5));
  EXPECT_EQ(Gl2Character::linear(3, 2), Gl2Character::linear(3, 0));
  EXPECT_EQ(Gl2Character::cuspidal(3, 1).degree(3), 2);
  EXPECT_EQ(Gl2Character::steinberg(3, 1).central_exponent(3), 0);
  EXPECT_EQ(Gl2Character::principal(5, 0, 1).central_exponent(5), 1);
  EXPECT_FALSE(Gl2Character::cuspidal(5, 1).trivial_on_norm_one(5));
}

TEST(Gl2ClassDatum, HalfPowerIsElliptic) {
  for (std::int64_t q : {3, 5, 7})
    for (std::int64_t k = 0; k < q - 1; ++k)
      EXPECT_EQ(gl2_half_power_datum(q, k).kind, Gl2ClassDatum::Kind::elliptic);
}

}  // namespace
}  // namespace gsp4
