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

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "gsp4/store.hpp"

namespace gsp4 {
namespace {

namespace fs = std::filesystem;
using testing::q3;
using testing::q3_table;

class Store : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() / ("gsp4-store-test-" + std::to_string(::getpid()));
    fs::remove_all(root_);
  }
  void TearDown() override { fs::remove_all(root_); }
  fs::path root_;
};

TEST_F(Store, Sha256) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(Store, RoundTrip) {
  CacheStore S(root_);
  EXPECT_FALSE(S.load(3, ArtifactKind::classes).has_value());
  auto e = make_entry(3, ArtifactKind::classes, classes_to_json(q3().L).dump());
  S.save(e);
  auto back = S.load(3, ArtifactKind::classes);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, e);
  EXPECT_TRUE(fs::exists(root_ / "v1" / "q3" / "classes.meta.json"));
  EXPECT_FALSE(S.load(5, ArtifactKind::classes).has_value());
  EXPECT_FALSE(S.load(3, ArtifactKind::irreducibles).has_value());
}

TEST_F(Store, CorruptPayloadIsDetected) {
  CacheStore S(root_);
  S.save(make_entry(3, ArtifactKind::gl2, "payload bytes"));
  auto p = root_ / "v1" / "q3" / "gl2.payload";
  std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
  f.seekp(3);
  f.put('X');
  f.close();
  EXPECT_THROW(S.load(3, ArtifactKind::gl2), HashMismatchError);
}

TEST_F(Store, MetadataMismatchIsAMiss) {
  CacheStore S(root_);
  S.save(make_entry(3, ArtifactKind::whittaker, "x"));
  auto meta = root_ / "v1" / "q3" / "whittaker.meta.json";
  auto j = Json::parse(std::ifstream(meta));
  j["q"] = 5;
  std::ofstream(meta) << j.dump();
  EXPECT_FALSE(S.load(3, ArtifactKind::whittaker).has_value());
  std::ofstream(meta) << "{not json";
  EXPECT_THROW(S.load(3, ArtifactKind::whittaker), CacheError);
}

TEST_F(Store, OtherSchemaIsIgnored) {
  CacheStore S(root_);
  auto e = make_entry(3, ArtifactKind::induced, "y");
  e.schema = kSchemaVersion + 1;
  S.save(e);
  EXPECT_FALSE(S.load(3, ArtifactKind::induced).has_value());
}

TEST(Serialization, ClassesRoundTrip) {
  const auto& D = q3();
  Json j = Json::parse(classes_to_json(D.L).dump());
  ClassList L = classes_from_json(D.G, j);
  ASSERT_EQ(L.size(), D.L.size());
  for (std::size_t c = 0; c < L.size(); ++c) {
    EXPECT_EQ(L.classes[c].label, D.L.classes[c].label);
    EXPECT_EQ(L.classes[c].representative, D.L.classes[c].representative);
    EXPECT_EQ(L.classes[c].size, D.L.classes[c].size);
    EXPECT_EQ(L.classes[c].fingerprint, D.L.classes[c].fingerprint);
  }
  j["classes"][0]["label"] = "A1(k=99)";
  EXPECT_THROW(classes_from_json(D.G, j), CacheError);
  EXPECT_THROW(classes_from_json(Gsp4(5), Json::parse(classes_to_json(D.L).dump())), CacheError);
}

TEST(Serialization, TableRoundTrip) {
  const auto& D = q3();
  const auto& X = q3_table();
  std::string text = table_to_json(D.L, X.T, X.families.annotation, X.generic).dump();
  CharacterTable T = table_from_json(D.L, Json::parse(text));
  ASSERT_EQ(T.size(), X.T.size());
  EXPECT_EQ(T.degrees, X.T.degrees);
  for (std::size_t i = 0; i < T.size(); ++i) EXPECT_EQ(T.characters[i].max_abs_diff(X.T.characters[i]), 0.0);
  EXPECT_EQ(table_to_json(D.L, T, X.families.annotation, X.generic).dump(), text);
}

TEST(Serialization, Csv) {
  const auto& D = q3();
  const auto& X = q3_table();
  std::string cls = classes_to_csv(D.L);
  EXPECT_EQ(std::count(cls.begin(), cls.end(), '\n'), 39);
  std::string tab = table_to_csv(D.L, X.T, X.families.annotation, X.generic);
  std::istringstream in(tab);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3 + 2 * 38);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("0,1,", 0), 0u);
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(std::stod(format_double(0.1)), 0.1);
  std::string dims = dims_to_csv(3);
  EXPECT_NE(dims.find("\nI,"), std::string::npos);
  EXPECT_EQ(dims_to_json(3)["rows"][0]["dimension"], 160);
}

}  // namespace
}  // namespace gsp4
