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

TEST(ClassFunction, TrivialCharacterHasNormOne) {
  const auto& P = q3().L.partition;
  auto one = ClassFunction::constant(P, 1.0);
  EXPECT_NEAR(std::abs(inner_product(one, one) - Complex(1, 0)), 0.0, 1e-12);
  auto z = ClassFunction::zero(P);
  EXPECT_EQ(std::abs(inner_product(z, one)), 0.0);
}

TEST(ClassFunction, RegularCharacter) {
  const auto& L = q3().L;
  auto reg = ClassFunction::zero(L.partition);
  reg[L.identity_class()] = static_cast<double>(L.group_order);
  auto one = ClassFunction::constant(L.partition, 1.0);
  EXPECT_EQ(as_integer(inner_product(reg, one)), 1);
  EXPECT_EQ(as_integer(inner_product(reg, reg)), static_cast<std::int64_t>(L.group_order));
}

TEST(ClassFunction, AsInteger) {
  EXPECT_EQ(as_integer({3.0000001, 0}), 3);
  EXPECT_EQ(as_integer({-2, 1e-9}), -2);
  EXPECT_THROW(as_integer({2.5, 0}), std::domain_error);
  EXPECT_THROW(as_integer({2, 0.1}), std::domain_error);
}

TEST(ClassFunction, PartitionMismatchThrows) {
  ConjugacyPartition other = q3().L.partition;
  auto a = ClassFunction::constant(q3().L.partition, 1.0);
  auto b = ClassFunction::constant(other, 1.0);
  EXPECT_THROW(inner_product(a, b), std::invalid_argument);
}

TEST(Induction, FrobeniusSumEqualsIntersectionFormula) {
  const auto& D = q3();
  for (Subgroup s : {Subgroup::borel, Subgroup::siegel, Subgroup::klingen, Subgroup::unipotent}) {
    auto H = D.G.subgroup_elements(s);
    const Gsp4* g = &D.G;
    std::vector<std::function<Complex(const Mat4&)>> ev{
        [](const Mat4&) { return Complex(1, 0); },
        [g](const Mat4& m) { return g->multiplier_of_member(m) == 1 ? Complex(1, 0) : Complex(-1, 0); }};
    auto a = induce_frobenius<4>(D.E, D.L.partition, [g, s](const Mat4& m) { return g->in_subgroup(m, s); }, ev,
                                 H.size());
    auto b = induce_by_intersection<4>(D.E, D.L.partition, H, ev);
    for (std::size_t t = 0; t < ev.size(); ++t) {
      EXPECT_LT(a[t].max_abs_diff(b[t]), 1e-9) << subgroup_name(s);
      double idx = static_cast<double>(D.G.order() / H.size());
      EXPECT_NEAR(a[t][D.L.identity_class()].real(), idx, 1e-9);
    }
    // Frobenius reciprocity against the trivial character
    auto one = ClassFunction::constant(D.L.partition, 1.0);
    EXPECT_EQ(as_integer(inner_product(a[0], one)), 1);
    // the multiplier is 1 on all of N
    EXPECT_EQ(as_integer(inner_product(a[1], one)), s == Subgroup::unipotent ? 1 : 0);
  }
}

TEST(Induction, WorkLimit) {
  const auto& D = q3();
  std::vector<std::function<Complex(const Mat4&)>> ev{[](const Mat4&) { return Complex(1, 0); }};
  EXPECT_THROW(induce_frobenius<4>(
                   D.E, D.L.partition, [](const Mat4&) { return true; }, ev, D.E.size(), 1000),
               ResourceGuardError);
}

TEST(Decompose, RejectsIncompleteTables) {
  const auto& P = q3().L.partition;
  std::vector<ClassFunction> one{ClassFunction::constant(P, 1.0)};
  EXPECT_THROW(decompose(one.front(), one), std::invalid_argument);
}

}  // namespace
}  // namespace gsp4
