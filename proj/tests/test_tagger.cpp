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

#include <string>
#include <vector>

#include "nisonto/document.hpp"
#include "nisonto/error.hpp"
#include "nisonto/lexicon.hpp"
#include "nisonto/serialize.hpp"
#include "nisonto/tagger.hpp"

namespace nisonto::nlp {
namespace {

std::vector<std::string> corpus_sentences() {
  std::string src = io::read_file(std::string(NISONTO_DATA_DIR) + "/corpus/nis2_excerpt.txt");
  std::vector<std::string> out;
  for (const auto& a : ingest::parse_directive(src, {1, 99}).articles) {
    for (const auto& item : a.items) {
      for (const auto& s : item.sentences) out.push_back(s.text);
    }
  }
  return out;
}

class TaggerTest : public ::testing::Test {
 protected:
  TaggerTest() : tagger_(Lexicon::builtin(), Gazetteer::builtin()) {}

  std::vector<Token> tag(std::string_view s) const { return tagger_.tag(tokenize(s)); }

  PosTag tag_of(std::string_view sentence, std::string_view word) const {
    for (const auto& t : tag(sentence)) {
      if (t.text == word) return t.tag;
    }
    ADD_FAILURE() << word << " not in " << sentence;
    return PosTag::kOther;
  }

  Tagger tagger_;
};

TEST(Tokenize, Words) {
  auto toks = tokenize("Member States shall ensure that the plan works.");
  std::vector<std::string> words;
  for (const auto& t : toks) words.push_back(t.text);
  EXPECT_EQ(words, (std::vector<std::string>{"Member", "States", "shall", "ensure", "that", "the",
                                             "plan", "works", "."}));
}

TEST(Tokenize, ReferencesStayWhole) {
  auto toks = tokenize("in accordance with Article 47(1) of Regulation (EU) 2022/2554");
  std::vector<std::string> words;
  for (const auto& t : toks) words.push_back(t.text);
  EXPECT_NE(std::find(words.begin(), words.end(), "47(1)"), words.end());
  EXPECT_NE(std::find(words.begin(), words.end(), "(EU)"), words.end());
  EXPECT_NE(std::find(words.begin(), words.end(), "2022/2554"), words.end());
}

TEST(Tokenize, SpansOrderedAndLossless) {
  for (const auto& s : corpus_sentences()) {
    auto toks = tokenize(s);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      ASSERT_LT(toks[i].span.begin, toks[i].span.end);
      EXPECT_EQ(s.substr(toks[i].span.begin, toks[i].span.size()), toks[i].text);
      if (i > 0) {
        EXPECT_LE(toks[i - 1].span.end, toks[i].span.begin);
      }
    }
    EXPECT_EQ(detokenize(s, toks), s);
  }
}

TEST_F(TaggerTest, ClosedClassAndSuffixes) {
  const std::string s = "The Cooperation Group shall be composed of representatives of Member States.";
  EXPECT_EQ(tag_of(s, "The"), PosTag::kDeterminer);
  EXPECT_EQ(tag_of(s, "shall"), PosTag::kModalVerb);
  EXPECT_EQ(tag_of(s, "composed"), PosTag::kPastParticiple);
  EXPECT_EQ(tag_of(s, "of"), PosTag::kPreposition);
  EXPECT_EQ(tag_of(s, "Group"), PosTag::kProperNoun);
  EXPECT_EQ(tag_of("The implementation works effectively.", "implementation"), PosTag::kNoun);
  EXPECT_EQ(tag_of("The implementation works effectively.", "effectively"), PosTag::kAdverb);
  EXPECT_EQ(tag_of("Article 47(1) applies.", "47(1)"), PosTag::kNumber);
}

TEST_F(TaggerTest, LemmasAreNonEmpty) {
  auto toks = tag("Member States shall be composed of representatives and has tasks.");
  for (const auto& t : toks) EXPECT_FALSE(t.lemma.empty()) << t.text;
  for (const auto& t : toks) {
    if (t.text == "composed") {
      EXPECT_EQ(t.lemma, "compose");
    }
    if (t.text == "has") {
      EXPECT_EQ(t.lemma, "have");
    }
    if (t.text == "representatives") {
      EXPECT_EQ(t.lemma, "representative");
    }
  }
}

TEST_F(TaggerTest, DeterministicOverCorpus) {
  for (const auto& s : corpus_sentences()) {
    auto a = tag(s);
    auto b = tag(s);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].tag, b[i].tag);
      EXPECT_EQ(a[i].lemma, b[i].lemma);
    }
  }
}

TEST_F(TaggerTest, ActiveModalGroup) {
  auto toks = tag("The European External Action Service shall participate in the activities.");
  auto groups = find_verb_groups(toks, tagger_.lexicon());
  ASSERT_EQ(groups.size(), 1u);
  ASSERT_TRUE(groups[0].modal.has_value());
  EXPECT_EQ(toks[*groups[0].modal].text, "shall");
  EXPECT_EQ(toks[groups[0].head].text, "participate");
  EXPECT_FALSE(groups[0].is_passive);
}

TEST_F(TaggerTest, PassiveGroup) {
  auto toks = tag("The Cooperation Group shall be composed of representatives.");
  auto groups = find_verb_groups(toks, tagger_.lexicon());
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_TRUE(groups[0].is_passive);
  EXPECT_EQ(toks[groups[0].head].text, "composed");
  EXPECT_EQ(toks[groups[0].head].tag, PosTag::kPastParticiple);
}

TEST_F(TaggerTest, VerblessFragment) {
  try {
    find_verb_groups(tag("adequate resources"), tagger_.lexicon());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoVerbFound);
  }
}

TEST_F(TaggerTest, GroupsDisjointAndWellFormed) {
  for (const auto& s : corpus_sentences()) {
    auto toks = tag(s);
    std::vector<VerbGroup> groups;
    try {
      groups = find_verb_groups(toks, tagger_.lexicon());
    } catch (const Error&) {
      continue;
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& vg = groups[g];
      EXPECT_LT(vg.begin, vg.end);
      EXPECT_GE(vg.head, vg.begin);
      EXPECT_LT(vg.head, vg.end);
      PosTag h = toks[vg.head].tag;
      EXPECT_TRUE(h == PosTag::kVerb || h == PosTag::kPastParticiple) << s;
      if (vg.is_passive) {
        EXPECT_EQ(h, PosTag::kPastParticiple);
      }
      if (g > 0) {
        EXPECT_LE(groups[g - 1].end, vg.begin) << s;
      }
    }
  }
}

}  // namespace
}  // namespace nisonto::nlp
