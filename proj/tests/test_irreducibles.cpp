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

#include "fixtures.hpp"

namespace gsp4 {
namespace {

using testing::q3;
using testing::q3_table;

TEST(StructureConstants, TwoLoopOrdersAgree) {
  const auto& D = q3();
  const std::size_t n = D.L.size();
  std::vector<std::size_t> rows{1, 7, 20, n - 1};
  auto sc = structure_constants<4>(D.E, D.L.partition, D.inverse(), rows);
  std::mt19937_64 rng(3);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int t = 0; t < 6; ++t) {
      std::size_t j = rng() % n, k = rng() % n;
      EXPECT_EQ(sc(r, j, k), structure_constant_by_pairs<4>(D.E, D.L.partition, D.inverse(), rows[r], j, k));
    }
    // each x in C_i pairs with exactly one y
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += sc(r, j, k);
      EXPECT_EQ(s, D.L.partition.size[rows[r]]);
    }
  }
  EXPECT_EQ(sc.position(7), std::optional<std::size_t>(1));
  EXPECT_FALSE(sc.position(2).has_value());
}

TEST(CharacterTable, SplittingAgreesWithFullSolver) {
  const auto& D = q3();
  const auto& T = q3_table().T;
  auto sc = structure_constants<4>(D.E, D.L.partition, D.inverse());
  auto full = solve_character_table(D.L.partition, sc, D.L.identity_class());
  ASSERT_EQ(full.size(), T.size());
  EXPECT_EQ(full.degrees, T.degrees);
  for (std::size_t i = 0; i < T.size(); ++i) EXPECT_LT(full.characters[i].max_abs_diff(T.characters[i]), 1e-6);
}

TEST(CharacterTable, Orthogonality) {
  const auto& T = q3_table().T;
  EXPECT_EQ(T.size(), 38u);
  EXPECT_LT(row_orthonormality_error(T), 1e-9);
  EXPECT_LT(column_orthogonality_error(T), 1e-6);
}

TEST(CharacterTable, Degrees) {
  const auto& D = q3();
  const auto& T = q3_table().T;
  std::uint64_t sq = 0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    sq += static_cast<std::uint64_t>(T.degrees[i] * T.degrees[i]);
    EXPECT_NEAR(T.characters[i][D.L.identity_class()].real(), static_cast<double>(T.degrees[i]), 1e-9);
    EXPECT_EQ(static_cast<std::uint64_t>(D.L.group_order) % static_cast<std::uint64_t>(T.degrees[i]), 0u);
  }
  EXPECT_EQ(sq, 103680u);
  EXPECT_TRUE(std::is_sorted(T.degrees.begin(), T.degrees.end()));
  std::set<std::int64_t> got(T.degrees.begin(), T.degrees.end());
  EXPECT_EQ(got, inventory_degree_set(3));
  // one-dimensional characters factor through the multiplier
  EXPECT_EQ(std::count(T.degrees.begin(), T.degrees.end(), 1), 2);
}

TEST(CharacterTable, ValuesAreAlgebraicIntegersOnCentre) {
  const auto& D = q3();
  const auto& T = q3_table().T;
  for (const auto& chi : T.characters)
    for (std::size_t c = 0; c < D.L.size(); ++c)
      if (D.L.classes[c].label.family == Family::A1) {
        EXPECT_NEAR(std::abs(chi[c]), std::abs(chi[D.L.identity_class()]), 1e-9);
      }
}

TEST(Inventory, IndexSetSizes) {
  EXPECT_EQ(index_set_size(IndexSet::t1_pairs, 9), 3);
  EXPECT_EQ(index_set_size(IndexSet::t2_ordered_pairs, 5), 2);
  EXPECT_EQ(index_set_size(IndexSet::t2_times_t1, 7), 6);
  EXPECT_EQ(index_set_size(IndexSet::t1, 3), 0);
  // theta13 is the Steinberg character
  EXPECT_EQ(irreducible_inventory().back().degree(5), 625);
}

}  // namespace
}  // namespace gsp4
