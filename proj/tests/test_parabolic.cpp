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

#include "fixtures.hpp"

namespace gsp4 {
namespace {

using testing::q3;

class Parabolics : public ::testing::TestWithParam<Parabolic> {};

TEST_P(Parabolics, ClosedFormMatchesFrobeniusSum) {
  const auto& D = q3();
  const Parabolic p = GetParam();
  auto specs = all_specs(3, p);
  ASSERT_EQ(specs.size(), p == Parabolic::borel ? 8u : 16u);
  std::vector<SubgroupCharacter<4>> chis;
  std::vector<std::function<Complex(const Mat4&)>> ev;
  for (const auto& sp : specs) {
    chis.push_back(inducing_character(D.G, sp));
    ev.push_back(chis.back().eval);
  }
  auto induced = induce_frobenius<4>(D.E, D.L.partition, chis.front().contains, ev, chis.front().subgroup_order);
  for (std::size_t t = 0; t < specs.size(); ++t) {
    auto closed = closed_form_character(D.L, specs[t]);
    EXPECT_LT(closed.max_abs_diff(induced[t]), 1e-6) << specs[t].str();
    EXPECT_NEAR(closed[D.L.identity_class()].real(), static_cast<double>(specs[t].degree(3)), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(All, Parabolics,
                         ::testing::Values(Parabolic::borel, Parabolic::siegel, Parabolic::klingen));

TEST(Parabolic, SpecCounts) {
  for (std::int64_t q : {3, 5, 7}) {
    EXPECT_EQ(static_cast<std::int64_t>(all_specs(q, Parabolic::borel).size()), (q - 1) * (q - 1) * (q - 1));
    EXPECT_EQ(static_cast<std::int64_t>(all_specs(q, Parabolic::siegel).size()), (q * q - 1) * (q - 1));
    EXPECT_EQ(static_cast<std::int64_t>(all_specs(q, Parabolic::klingen).size()), (q * q - 1) * (q - 1));
  }
}

TEST(Parabolic, CentralCharacter) {
  const auto& D = q3();
  for (Parabolic p : {Parabolic::borel, Parabolic::siegel, Parabolic::klingen})
    for (const auto& sp : all_specs(3, p)) {
      auto f = closed_form_character(D.L, sp);
      for (std::size_t c = 0; c < D.L.size(); ++c) {
        if (D.L.classes[c].label.family != Family::A1) continue;
        std::int64_t k = D.G.arith().log(D.L.classes[c].representative(0, 0));
        Complex want = static_cast<double>(sp.degree(3)) * unit_root(sp.central_exponent(3) * k, 2);
        EXPECT_NEAR(std::abs(f[c] - want), 0.0, 1e-9) << sp.str();
      }
    }
}

TEST(BorelNorm, ClosedFormMatchesInnerProduct) {
  const auto& D = q3();
  for (const auto& sp : all_specs(3, Parabolic::borel)) {
    auto f = closed_form_character(D.L, sp);
    EXPECT_EQ(as_integer(inner_product(f, f)), borel_norm(3, sp.m1, sp.m2)) << sp.str();
  }
}

TEST(BorelNorm, ClosedFormMatchesWeylOrbit) {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13})
    for (std::int64_t a = 0; a < q - 1; ++a)
      for (std::int64_t b = 0; b < q - 1; ++b) {
        std::int64_t n = borel_norm(q, a, b);
        EXPECT_EQ(n, borel_norm_weyl(q, a, b)) << q << " " << a << " " << b;
        bool irr = a != 0 && b != 0 && floor_mod(a - b, q - 1) != 0 && floor_mod(a + b, q - 1) != 0;
        EXPECT_EQ(n == 1, irr) << q << " " << a << " " << b;
        EXPECT_TRUE(n == 1 || n == 2 || n == 4 || n == 8);
      }
}

TEST(ZFlags, Values) {
  ZFlags z = z_flags(5, 1, 3);
  EXPECT_EQ(z[1], 0);
  EXPECT_EQ(z[3], 0);
  EXPECT_EQ(z[6], 4);  // chi2 = chi1^-1
  EXPECT_EQ(z[5], 0);
  ZFlags t = z_flags(5, 0, 2);
  EXPECT_EQ(t[1], 4);
  EXPECT_EQ(t[4], 4);
  EXPECT_EQ(z_flags(5, 0, 0, 6)[7], 6);
  EXPECT_EQ(z_flags(5, 0, 0, 1)[7], 0);
}

TEST(ZFlags, SeventhFlagVanishesOnCuspidalParameters) {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13})
    for (const auto& pi : gl2_irreducibles(q))
      if (pi.family == Gl2Family::cuspidal) {
        EXPECT_EQ(z_flags(q, 0, 0, pi.a)[7], 0) << q << " " << pi.str();
      }
}

TEST(CharacterSums, IdentitiesHold) {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13})
    for (int id = 1; id <= 8; ++id)
      for (std::int64_t a = 0; a < q - 1; ++a)
        for (std::int64_t b = 0; b < q - 1; ++b) {
          if (id == 8 && floor_mod(2 * a, q - 1) == 0) continue;
          EXPECT_TRUE(lemma1_sum(q, id, a, b).holds()) << "q=" << q << " id=" << id << " " << a << "," << b;
        }
}

// The unsymmetrized sum over i < j weights i by its position in T1.
TEST(CharacterSums, LiteralSixthIdentityFailsAtSeven) {
  bool any_fail = false;
  for (std::int64_t a = 0; a < 6; ++a)
    for (std::int64_t b = 0; b < 6; ++b) any_fail = any_fail || !lemma1_sum(7, 6, a, b, true).holds();
  EXPECT_TRUE(any_fail);
  EXPECT_FALSE(lemma1_sum(7, 6, 1, 2, true).holds());
  EXPECT_THROW(lemma1_sum(7, 9, 0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace gsp4
