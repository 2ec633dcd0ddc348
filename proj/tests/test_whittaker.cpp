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
using testing::q3_table;

TEST(GelfandGraev, MatchesTabulatedValues) {
  const auto& D = q3();
  auto gg = gelfand_graev(D.G, D.E, D.L);
  for (std::size_t c = 0; c < D.L.size(); ++c) {
    Complex want = gelfand_graev_table_value(3, D.L.classes[c].label);
    EXPECT_NEAR(std::abs(gg[c] - want), 0.0, 1e-9) << D.L.classes[c].label.str();
  }
  EXPECT_NEAR(gg[D.L.identity_class()].real(), 1280.0, 1e-9);
}

TEST(GelfandGraev, FrobeniusSumAgrees) {
  const auto& D = q3();
  EXPECT_LT(gelfand_graev(D.G, D.E, D.L).max_abs_diff(gelfand_graev_frobenius(D.G, D.E, D.L)), 1e-9);
}

// All nondegenerate characters of N are conjugate under the torus.
TEST(GelfandGraev, IndependentOfDatum) {
  const auto& D = q3();
  auto gg = gelfand_graev(D.G, D.E, D.L);
  for (Code a1 = 1; a1 < 3; ++a1)
    for (Code a2 = 1; a2 < 3; ++a2) EXPECT_LT(gg.max_abs_diff(gelfand_graev(D.G, D.E, D.L, {a1, a2})), 1e-9);
  EXPECT_THROW(whittaker_character(D.G, {0, 1}), std::invalid_argument);
}

TEST(GelfandGraev, MultiplicityFree) {
  const auto& T = q3_table();
  std::int64_t norm = as_integer(inner_product(T.gg, T.gg));
  std::int64_t generic = 0;
  for (bool g : T.generic) generic += g;
  EXPECT_EQ(norm, generic);
  EXPECT_EQ(norm, 18);
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < T.T.size(); ++i)
    if (T.generic[i]) deg += T.T.degrees[i];
  EXPECT_EQ(deg, 1280);
}

TEST(WhittakerCharacter, IsACharacterOfN) {
  const auto& D = q3();
  auto chi = whittaker_character(D.G, {});
  auto N = D.G.subgroup_elements(Subgroup::unipotent);
  for (std::size_t i = 0; i < N.size(); ++i)
    for (std::size_t j = 0; j < N.size(); j += 5)
      EXPECT_NEAR(std::abs(chi.eval(D.G.mul(N[i], N[j])) - chi.eval(N[i]) * chi.eval(N[j])), 0.0, 1e-12);
}

}  // namespace
}  // namespace gsp4
