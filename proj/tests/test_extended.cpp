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

// q = 5 oracles. One enumeration of the 37,440,000 elements is shared by
// every test in this binary.

#include <gtest/gtest.h>

#include <algorithm>

#include "gsp4/verify.hpp"

namespace gsp4 {
namespace {

const GroupData& q5() {
  static const GroupData d(5);
  return d;
}

const TableData& q5_table() {
  static const TableData t(q5());
  return t;
}

TEST(Q5, Classes) {
  const auto& L = q5().L;
  EXPECT_EQ(L.group_order, 37'440'000u);
  EXPECT_EQ(L.size(), 156u);
  std::uint64_t total = 0;
  std::set<std::string> labels;
  for (const auto& c : L.classes) {
    total += c.size;
    EXPECT_EQ(c.size * c.centralizer_order, L.group_order);
    labels.insert(c.label.str());
  }
  EXPECT_EQ(total, L.group_order);
  EXPECT_EQ(labels.size(), L.size());
}

TEST(Q5, SplitCountsMatchPublishedTable) {
  const auto& D = q5();
  for (auto [s, pick] : {std::pair{Subgroup::borel, 0}, std::pair{Subgroup::siegel, 1},
                         std::pair{Subgroup::klingen, 2}}) {
    auto counts = split_counts(D.G, D.E, D.L, s);
    for (std::size_t c = 0; c < D.L.size(); ++c) {
      auto it = std::find_if(published_split_counts().begin(), published_split_counts().end(),
                             [&](const SplitRow& r) { return r.family == D.L.classes[c].label.family; });
      ASSERT_NE(it, published_split_counts().end());
      int want = pick == 0 ? it->borel : pick == 1 ? it->siegel : it->klingen;
      EXPECT_EQ(counts[c], want) << subgroup_name(s) << " " << D.L.classes[c].label.str();
    }
  }
}

TEST(Q5, CharacterTable) {
  const auto& T = q5_table().T;
  ASSERT_EQ(T.size(), 156u);
  EXPECT_LT(row_orthonormality_error(T), limits::kRowTolerance);
  EXPECT_LT(column_orthogonality_error(T), limits::kColumnTolerance);
  std::uint64_t sq = 0;
  for (auto d : T.degrees) sq += static_cast<std::uint64_t>(d * d);
  EXPECT_EQ(sq, 37'440'000u);
  std::set<std::int64_t> got(T.degrees.begin(), T.degrees.end());
  EXPECT_EQ(got, inventory_degree_set(5));
  EXPECT_EQ(std::count(T.degrees.begin(), T.degrees.end(), 625), 4);
}

TEST(Q5, GelfandGraev) {
  const auto& D = q5();
  const auto& X = q5_table();
  for (std::size_t c = 0; c < D.L.size(); ++c)
    EXPECT_NEAR(std::abs(X.gg[c] - gelfand_graev_table_value(5, D.L.classes[c].label)), 0.0, 1e-6);
  EXPECT_EQ(as_integer(inner_product(X.gg, X.gg)), 100);
}

TEST(Q5, FamiliesAndDimensions) {
  const auto& D = q5();
  const auto& X = q5_table();
  for (const auto& c : X.families.checks) EXPECT_TRUE(c.ok) << c.group << ": " << c.detail;
  EXPECT_EQ(X.families.cuspidal_count + X.families.noncuspidal_count, 156u);
  auto R = verify_dimension_identities(D.L, X.T, X.families);
  for (const auto& c : R.checks) EXPECT_TRUE(c.ok) << c.what << ": " << c.detail;
}

TEST(Q5, SampledInduction) {
  const auto& D = q5();
  for (Parabolic p : {Parabolic::borel, Parabolic::siegel, Parabolic::klingen}) {
    auto specs = all_specs(5, p);
    auto H = D.G.subgroup_elements(parabolic_subgroup(p));
    std::vector<InducedSpec> sample;
    std::vector<std::function<Complex(const Mat4&)>> ev;
    for (std::size_t i = 0; i < specs.size(); i += 13) {
      sample.push_back(specs[i]);
      ev.push_back(inducing_character(D.G, specs[i]).eval);
    }
    auto induced = induce_by_intersection<4>(D.E, D.L.partition, H, ev);
    for (std::size_t t = 0; t < sample.size(); ++t)
      EXPECT_LT(closed_form_character(D.L, sample[t]).max_abs_diff(induced[t]), limits::kInductionTolerance)
          << sample[t].str();
  }
}

}  // namespace
}  // namespace gsp4
