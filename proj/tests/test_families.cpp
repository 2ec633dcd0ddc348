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

TEST(Families, AllChecksPass) {
  const auto& F = q3_table().families;
  for (const auto& c : F.checks) EXPECT_TRUE(c.ok) << c.group << ": " << c.detail;
  EXPECT_TRUE(F.ok());
  EXPECT_EQ(F.specs.size(), 40u);
  EXPECT_EQ(F.cuspidal_count + F.noncuspidal_count, 38u);
  EXPECT_NE(F.find("I"), nullptr);
  EXPECT_EQ(F.find("no such group"), nullptr);
}

TEST(Families, NormsAreSumsOfSquares) {
  const auto& D = q3();
  for (const auto& d : q3_table().families.specs) {
    auto f = closed_form_character(D.L, d.spec);
    EXPECT_EQ(as_integer(inner_product(f, f)), d.norm) << d.spec.str();
    std::int64_t deg = 0;
    for (const auto& c : d.constituents) deg += c.multiplicity * q3_table().T.degrees[c.index];
    EXPECT_EQ(deg, d.spec.degree(3));
  }
}

TEST(Families, CuspidalsMeetNoInducedCharacter) {
  const auto& F = q3_table().families;
  for (std::size_t i = 0; i < F.cuspidal.size(); ++i) {
    bool seen = false;
    for (const auto& d : F.specs) seen = seen || d.contains(i);
    EXPECT_EQ(F.cuspidal[i], !seen) << i;
  }
}

TEST(Families, AnnotatedDegrees) {
  const auto& X = q3_table();
  const std::map<std::string, std::int64_t> want = {{"Va", 90}, {"Vb", 30}, {"Vc", 30}, {"Vd", 10}};
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < X.T.size(); ++i) {
    auto it = want.find(X.families.annotation[i]);
    if (it == want.end()) continue;
    ++seen[it->first];
    EXPECT_EQ(X.T.degrees[i], it->second) << it->first;
  }
  for (const auto& [name, deg] : want) EXPECT_GT(seen[name], 0) << name;
}

}  // namespace
}  // namespace gsp4
