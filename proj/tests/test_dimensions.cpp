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

TEST(DimensionPolynomial, Evaluation) {
  EXPECT_EQ(dimpoly::I(3), 160);
  EXPECT_EQ(dimpoly::theta9(3), 24);
  EXPECT_EQ(dimpoly::theta11(5), 65);
  EXPECT_EQ((dimpoly::q4 + dimpoly::constant(1))(5), 626);
  EXPECT_THROW(DimensionPolynomial::from_twice({0, 1, 0, 0, 0})(3), std::domain_error);
  EXPECT_FALSE(dimpoly::q2_q2m1.str().empty());
  EXPECT_FALSE(dimpoly::q4 == dimpoly::q4m1);
}

TEST(DimensionTable, KnownValues) {
  EXPECT_EQ(padic_dimension("I", 3), 160);
  EXPECT_EQ(padic_dimension("IVd", 3), 1);
  EXPECT_EQ(padic_dimension("IVd", 13), 1);
  EXPECT_EQ(padic_dimension("VIa", 3), 105);
  EXPECT_EQ(padic_dimension("IVb", 3), 39);
  EXPECT_EQ(padic_dimension("XIa", 3), 60);
  EXPECT_EQ(padic_dimension("IVa", 5), 625);
  EXPECT_EQ(padic_dimension("VII", 5), 624);
  EXPECT_EQ(padic_types().size(), 25u);
}

TEST(DimensionTable, Errors) {
  EXPECT_THROW(padic_type("XII"), std::invalid_argument);
  EXPECT_THROW(padic_dimension("I", 4), std::invalid_argument);
  EXPECT_THROW(padic_dimension("I", 1), std::invalid_argument);
}

TEST(DimensionTable, PolynomialIdentities) {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    auto R = verify_dimension_polynomials(q);
    for (const auto& c : R.checks) EXPECT_TRUE(c.ok) << q << " " << c.what << " " << c.detail;
    for (const auto& t : padic_types()) EXPECT_GT(padic_dimension(t, q), 0);
  }
  auto vi = padic_type("VIa").dimension + padic_type("VIb").dimension + padic_type("VIc").dimension +
            padic_type("VId").dimension;
  EXPECT_EQ(vi, padic_type("I").dimension);
}

TEST(DimensionTable, AgainstComputedTable) {
  const auto& D = testing::q3();
  const auto& X = testing::q3_table();
  auto R = verify_dimension_identities(D.L, X.T, X.families);
  for (const auto& c : R.checks) EXPECT_TRUE(c.ok) << c.what << ": " << c.detail;
  EXPECT_TRUE(R.ok());
}

}  // namespace
}  // namespace gsp4
