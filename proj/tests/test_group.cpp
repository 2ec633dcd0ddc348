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

#include <algorithm>
#include <random>

#include "fixtures.hpp"

namespace gsp4 {
namespace {

using testing::q3;

/// Laplace expansion over F_q.
Code det(const FqArith& A, const Mat4& m) {
  std::array<std::size_t, 4> p{0, 1, 2, 3};
  Code s = 0;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
    Code t = 1;
    for (std::size_t i = 0; i < 4; ++i) t = A.mul(t, m(i, p[i]));
    s = inv % 2 ? A.sub(s, t) : A.add(s, t);
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

TEST(Group, Multiplier) {
  Gsp4 G(3);
  EXPECT_EQ(G.multiplier(Mat4::identity()), Code{1});
  for (Code c = 1; c < 3; ++c) EXPECT_EQ(G.multiplier(G.torus(1, 1, c)), c);
  EXPECT_EQ(G.multiplier(G.form()), Code{1});
  Mat4 bad = Mat4::identity();
  bad(0, 1) = 1;
  bad(0, 3) = 1;
  bad(3, 3) = 2;
  EXPECT_FALSE(G.multiplier(bad).has_value());
}

TEST(Group, EnumerationAtThree) {
  const auto& D = q3();
  EXPECT_EQ(D.E.size(), 103680u);
  EXPECT_EQ(D.E.size(), D.G.order());
  auto keys = D.E.keys();
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
  const FqArith& A = D.G.arith();
  for (std::size_t i = 0; i < D.E.size(); i += 7) {
    Mat4 g = D.E.element(i);
    auto l = D.G.multiplier(g);
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(det(A, g), A.mul(*l, *l));
  }
}

TEST(Group, SubgroupOrders) {
  const auto& D = q3();
  for (auto [s, want] : {std::pair{Subgroup::borel, 648u}, std::pair{Subgroup::siegel, 2592u},
                         std::pair{Subgroup::klingen, 2592u}, std::pair{Subgroup::unipotent, 81u},
                         std::pair{Subgroup::sp4, 51840u}, std::pair{Subgroup::gsp4_plus, 51840u}}) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < D.E.size(); ++i) n += D.G.in_subgroup(D.E.element(i), s);
    EXPECT_EQ(n, want) << subgroup_name(s);
    EXPECT_EQ(D.G.subgroup_order(s), want);
    if (s != Subgroup::sp4 && s != Subgroup::gsp4_plus) {
      EXPECT_EQ(D.G.subgroup_elements(s).size(), want);
    }
    EXPECT_TRUE(D.G.in_subgroup(Mat4::identity(), s));
  }
  EXPECT_EQ(D.G.order() / D.G.subgroup_order(Subgroup::borel), 10u * 16u);
  EXPECT_EQ(D.G.order() / D.G.subgroup_order(Subgroup::siegel), 10u * 4u);
}

TEST(Group, MultiplierIsAHomomorphism) {
  const auto& D = q3();
  const FqArith& A = D.G.arith();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10000; ++t) {
    Mat4 g = D.E.element(rng() % D.E.size()), h = D.E.element(rng() % D.E.size());
    EXPECT_EQ(*D.G.multiplier(D.G.mul(g, h)), A.mul(*D.G.multiplier(g), *D.G.multiplier(h)));
  }
}

TEST(Group, BorelDecompositionRoundTripAtFive) {
  Gsp4 G(5);
  auto B = G.subgroup_elements(Subgroup::borel);
  ASSERT_EQ(B.size(), 625u * 64u);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10000; ++t) {
    const Mat4& g = B[rng() % B.size()];
    BorelParts p = G.decompose_borel(g);
    EXPECT_EQ(G.compose(p), g);
    EXPECT_EQ(G.multiplier_of_member(g), p.c);
  }
  BorelParts id = G.decompose_borel(Mat4::identity());
  EXPECT_EQ(id, BorelParts{});
  BorelParts d = G.decompose_borel(G.torus(2, 3, 4));
  EXPECT_EQ(d.a, 2);
  EXPECT_EQ(d.b, 3);
  EXPECT_EQ(d.c, 4);
  EXPECT_EQ(d.x | d.lambda | d.mu | d.kappa, 0);
}

TEST(Group, ParabolicDecompositionsRoundTrip) {
  Gsp4 G(3);
  for (const Mat4& g : G.subgroup_elements(Subgroup::siegel)) {
    SiegelParts p = G.decompose_siegel(g);
    ASSERT_EQ(G.compose(p), g);
    EXPECT_EQ(G.multiplier_of_member(g), p.lambda);
  }
  const FqArith& A = G.arith();
  for (const Mat4& g : G.subgroup_elements(Subgroup::klingen)) {
    KlingenParts p = G.decompose_klingen(g);
    ASSERT_EQ(G.compose(p), g);
    Code delta = A.sub(A.mul(p.A(0, 0), p.A(1, 1)), A.mul(p.A(0, 1), p.A(1, 0)));
    EXPECT_EQ(G.multiplier_of_member(g), delta);
  }
}

TEST(Group, ResourceGuard) {
  EXPECT_THROW(enumerate_group(Gsp4(7)), ResourceGuardError);
  EXPECT_THROW(enumerate_group(Gsp4(3), 1000), ResourceGuardError);
}

}  // namespace
}  // namespace gsp4
