// Copyright 2026 The nisonto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "nisonto/hash.hpp"
#include "nisonto/text.hpp"

namespace nisonto::text {
namespace {

TEST(Text, TrimAndCollapse) {
  EXPECT_EQ(trim("  a b \n"), "a b");
  EXPECT_EQ(trim(""), "");
  EXPECT_EQ(collapse_whitespace(" a  \n b\tc "), "a b c");
}

TEST(Text, SplitAndJoin) {
  auto words = split_words("  one two\nthree ");
  ASSERT_EQ(words.size(), 3u);
  EXPECT_EQ(join(words, "-"), "one-two-three");
  EXPECT_TRUE(split_words("   ").empty());
}

TEST(Text, CaseHelpers) {
  EXPECT_TRUE(iequals("ENISA", "enisa"));
  EXPECT_FALSE(iequals("ENISA", "enis"));
  EXPECT_EQ(to_lower("Member States"), "member states");
  EXPECT_EQ(capitalize("member"), "Member");
  EXPECT_EQ(capitalize("ENISA"), "ENISA");
}

}  // namespace
}  // namespace nisonto::text

namespace nisonto::hash {
namespace {

TEST(Hash, Sha256KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Hash, ShortHashIsStableAndSized) {
  EXPECT_EQ(fnv1a32(""), 0x811c9dc5u);
  EXPECT_EQ(fnv1a32("a"), 0xe40c292cu);
  EXPECT_EQ(short_hash("a"), "0c292c");
  EXPECT_EQ(short_hash("a", 8), "e40c292c");
  EXPECT_EQ(short_hash("objects"), short_hash("objects"));
}

}  // namespace
}  // namespace nisonto::hash
