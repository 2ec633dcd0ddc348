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
#include <set>

#include "fixtures.hpp"

namespace gsp4 {
namespace {

using testing::q3;

TEST(Conjugacy, ClassCountAndSizes) {
  const auto& L = q3().L;
  EXPECT_EQ(L.size(), 38u);
  std::uint64_t total = 0;
  for (const auto& c : L.classes) {
    total += c.size;
    EXPECT_EQ(c.size * c.centralizer_order, L.group_order);
  }
  EXPECT_EQ(total, 103680u);
  const auto& id = L.classes[L.identity_class()];
  EXPECT_EQ(id.size, 1u);
  EXPECT_EQ(id.centralizer_order, 103680u);
}

TEST(Conjugacy, OrbitPartitionOracle) {
  // conjugation by the generators only, with union-find
  const auto& D = q3();
  auto gens = D.G.generators();
  ConjugacyPartition P = conjugacy_partition(D.E, std::span<const Mat4>(gens));
  ASSERT_EQ(P.num_classes(), D.L.size());
  std::map<std::uint16_t, std::uint16_t> to_ours;
  for (std::size_t i = 0; i < D.E.size(); ++i) {
    auto [it, fresh] = to_ours.emplace(P.class_of[i], D.L.partition.class_of[i]);
    ASSERT_EQ(it->second, D.L.partition.class_of[i]);
  }
}

TEST(Conjugacy, FingerprintsAreClassInvariants) {
  const auto& D = q3();
  std::vector<Fingerprint> fp(D.L.size());
  for (std::size_t c = 0; c < D.L.size(); ++c) fp[c] = D.L.classes[c].fingerprint;
  for (std::size_t i = 0; i < D.E.size(); ++i)
    ASSERT_EQ(analyze(D.G, D.E.element(i)).fingerprint, fp[D.L.partition.class_of[i]]);
  std::set<Fingerprint> distinct(fp.begin(), fp.end());
  EXPECT_EQ(distinct.size(), fp.size());
}

TEST(Conjugacy, Labels) {
  const auto& D = q3();
  std::set<std::string> labels;
  std::map<Family, int> per_family;
  for (const auto& c : D.L.classes) {
    labels.insert(c.label.str());
    ++per_family[c.label.family];
    if (c.label.family == Family::A1) {
      EXPECT_EQ(c.size, 1u);
    }
  }
  EXPECT_EQ(labels.size(), 38u);
  EXPECT_EQ(per_family[Family::A1], 2);  // the centre, one class per scalar
  EXPECT_EQ(label_element(D.G, Mat4::scalar(D.G.arith().minus_one())).family, Family::A1);
}

TEST(Conjugacy, ParseLabel) {
  for (const auto& c : q3().L.classes) {
    auto l = parse_label(c.label.str());
    EXPECT_EQ(l.family, c.label.family);
    EXPECT_EQ(l.k, c.label.k);
    EXPECT_EQ(l.i, c.label.i);
  }
}

TEST(Conjugacy, SplitCountsMatchPublishedTable) {
  const auto& D = q3();
  auto sb = split_counts(D.G, D.E, D.L, Subgroup::borel);
  auto sp = split_counts(D.G, D.E, D.L, Subgroup::siegel);
  auto sq = split_counts(D.G, D.E, D.L, Subgroup::klingen);
  for (std::size_t c = 0; c < D.L.size(); ++c) {
    const SplitRow* row = nullptr;
    for (const auto& r : published_split_counts())
      if (r.family == D.L.classes[c].label.family) row = &r;
    ASSERT_NE(row, nullptr);
    EXPECT_EQ(sb[c], row->borel) << D.L.classes[c].label.str();
    EXPECT_EQ(sp[c], row->siegel) << D.L.classes[c].label.str();
    EXPECT_EQ(sq[c], row->klingen) << D.L.classes[c].label.str();
  }
}

// H-classes by brute force: conjugate a representative by every h in H.
TEST(Conjugacy, SplitCountsAgainstBruteForce) {
  const auto& D = q3();
  for (Subgroup s : {Subgroup::borel, Subgroup::siegel, Subgroup::klingen}) {
    auto elems = D.G.subgroup_elements(s);
    std::vector<Mat4> inv;
    for (const auto& h : elems) inv.push_back(D.G.inverse(h));
    std::set<Mat4> seen;
    std::vector<int> counts(D.L.size(), 0);
    for (const auto& x : elems) {
      if (seen.count(x)) continue;
      for (std::size_t t = 0; t < elems.size(); ++t) seen.insert(D.G.mul(D.G.mul(elems[t], x), inv[t]));
      ++counts[D.L.partition.class_of[D.E.index_of(x)]];
    }
    EXPECT_EQ(counts, split_counts(D.G, D.E, D.L, s)) << subgroup_name(s);
  }
}

}  // namespace
}  // namespace gsp4
