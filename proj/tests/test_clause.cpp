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

#include "nisonto/clause.hpp"
#include "nisonto/document.hpp"
#include "nisonto/error.hpp"
#include "nisonto/lexicon.hpp"
#include "nisonto/serialize.hpp"
#include "support/worked_examples.hpp"

namespace nisonto::clause {
namespace {

class ClauseTest : public ::testing::Test {
 protected:
  ClauseTest() : tagger_(nlp::Lexicon::builtin(), nlp::Gazetteer::builtin()), extractor_(tagger_) {}

  std::string text_of(const std::optional<Phrase>& p) const { return p ? p->text : "<none>"; }

  Phrase fallback_for(std::string_view sentence, std::size_t group = 0) const {
    auto toks = tagger_.tag(nlp::tokenize(sentence));
    auto groups = nlp::find_verb_groups(toks, tagger_.lexicon());
    return fallback_object(sentence, toks, groups.at(group));
  }

  ingest::DirectiveDocument corpus() const {
    std::string src = io::read_file(std::string(NISONTO_DATA_DIR) + "/corpus/nis2_excerpt.txt");
    return ingest::parse_directive(src, {7, 37});
  }

  nlp::Tagger tagger_;
  Extractor extractor_;
};

TEST(ClausePattern, NamesRoundTrip) {
  for (auto p : {ClausePattern::kSV, ClausePattern::kSVC, ClausePattern::kSVO, ClausePattern::kSVA,
                 ClausePattern::kSVOA, ClausePattern::kSVOC}) {
    EXPECT_EQ(parse_pattern(pattern_name(p)), p);
  }
  EXPECT_THROW(parse_pattern("VOS"), Error);
}

TEST_F(ClauseTest, ThatComplementNestsAClause) {
  auto clauses = extractor_.extract(testing::kArticle8Item5Sentence);
  ASSERT_FALSE(clauses.empty());
  const Clause& main = clauses[0];
  EXPECT_EQ(main.pattern, ClausePattern::kSVOC);
  EXPECT_EQ(text_of(main.subject), "Member States");
  EXPECT_EQ(main.verb.text, "shall ensure");
  EXPECT_TRUE(main.is_fallback_object);
  EXPECT_EQ(text_of(main.object), fallback_for(testing::kArticle8Item5Sentence).text);

  ASSERT_EQ(main.nested.size(), 2u);
  const Clause& inner = main.nested[0];
  EXPECT_EQ(inner.pattern, ClausePattern::kSVO);
  EXPECT_EQ(text_of(inner.subject), "their competent authorities and single points of contact");
  EXPECT_EQ(inner.verb.text, "have");
  EXPECT_EQ(text_of(inner.object), "adequate resources to carry out");
  ASSERT_FALSE(inner.adverbials.empty());
  EXPECT_EQ(inner.adverbials[0].text, "in an effective and efficient manner");

  const Clause& sibling = main.nested[1];
  EXPECT_TRUE(sibling.subject_inherited);
  EXPECT_EQ(text_of(sibling.subject), text_of(inner.subject));
  EXPECT_EQ(sibling.verb_lemma, "fulfil");
  EXPECT_EQ(text_of(sibling.object), "the objectives of this Directive");
}

TEST_F(ClauseTest, AdverbialsWithoutObject) {
  auto clauses = extractor_.extract(testing::kEeasSentence);
  ASSERT_EQ(clauses.size(), 1u);
  const Clause& c = clauses[0];
  EXPECT_EQ(c.pattern, ClausePattern::kSV);
  EXPECT_EQ(text_of(c.subject), "The European External Action Service");
  EXPECT_EQ(c.verb.text, "shall participate");
  EXPECT_FALSE(c.object.has_value());
  EXPECT_FALSE(c.complement.has_value());
  ASSERT_EQ(c.adverbials.size(), 2u);
  EXPECT_EQ(c.adverbials[0].text, "in the activities of the Cooperation Group");
  EXPECT_EQ(c.adverbials[1].text, "as an observer");
}

TEST_F(ClauseTest, TrailingPhraseStaysInObject) {
  auto clauses = extractor_.extract("Each Member State shall notify its incidents within 3 months.");
  ASSERT_EQ(clauses.size(), 1u);
  EXPECT_EQ(text_of(clauses[0].subject), "Each Member State");
  EXPECT_EQ(clauses[0].verb.text, "shall notify");
  EXPECT_EQ(text_of(clauses[0].object), "its incidents within 3 months");
  EXPECT_EQ(clauses[0].pattern, ClausePattern::kSVO);
}

TEST_F(ClauseTest, PassiveHasNoObject) {
  auto clauses = extractor_.extract(
      "The Cooperation Group shall be composed of representatives of Member States, the Commission and ENISA.");
  ASSERT_EQ(clauses.size(), 1u);
  const Clause& c = clauses[0];
  EXPECT_TRUE(c.passive);
  EXPECT_EQ(c.verb_lemma, "compose");
  EXPECT_FALSE(c.object.has_value());
  ASSERT_EQ(c.adverbials.size(), 1u);
  EXPECT_EQ(c.adverbials[0].text, "of representatives of Member States, the Commission and ENISA");
}

TEST_F(ClauseTest, CoordinatedClausesShareSubject) {
  auto clauses = extractor_.extract(
      "The CSIRTs shall cooperate and, where appropriate, exchange relevant information with sectoral communities.");
  ASSERT_EQ(clauses.size(), 2u);
  EXPECT_EQ(clauses[0].verb_lemma, "cooperate");
  EXPECT_EQ(clauses[1].verb_lemma, "exchange");
  EXPECT_TRUE(clauses[1].subject_inherited);
  EXPECT_EQ(text_of(clauses[1].subject), "The CSIRTs");
}

TEST_F(ClauseTest, VerblessSentenceIsUnextractable) {
  try {
    extractor_.extract("Adequate resources for all.");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnextractable);
  }
}

TEST_F(ClauseTest, FallbackObject) {
  EXPECT_EQ(fallback_for(testing::kArticle8Item5Sentence).text,
            "that their competent authorities and single points of contact have adequate resources to "
            "carry out, in an effective and efficient manner, the tasks assigned to them and thereby "
            "fulfil the objectives of this Directive");
  EXPECT_EQ(fallback_for("X shall adopt Y.").text, "Y");
  try {
    fallback_for("Member States shall comply.");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyTail);
  }
}

void check_clause(const Clause& c, const std::string& sentence) {
  EXPECT_EQ(c.pattern, pattern_for(c)) << sentence;
  EXPECT_FALSE(c.verb.text.empty());
  switch (c.pattern) {
    case ClausePattern::kSVO:
    case ClausePattern::kSVOA:
      EXPECT_TRUE(c.object && !c.complement);
      break;
    case ClausePattern::kSVC:
      EXPECT_TRUE(!c.object && c.complement);
      break;
    case ClausePattern::kSVOC:
      EXPECT_TRUE(c.object && c.complement);
      break;
    case ClausePattern::kSV:
    case ClausePattern::kSVA:
      EXPECT_TRUE(!c.object && !c.complement);
      break;
  }
  // Slots appear left to right; an inherited subject sits before the verb too.
  if (c.subject) {
    EXPECT_LE(c.subject->span.end, c.verb.span.begin) << sentence;
  }
  const auto& o = c.object_like();
  if (o) {
    EXPECT_GE(o->span.begin, c.verb.span.end) << sentence;
  }
  for (const Phrase* p : {c.subject ? &*c.subject : nullptr, &c.verb, o ? &*o : nullptr}) {
    if (p == nullptr) continue;
    if (p == &c.verb && !c.verb.text.empty() && c.verb.text.find(' ') != std::string::npos &&
        c.verb.span.size() != c.verb.text.size()) {
      continue;  // a modal with a comma insert is rendered without it
    }
    EXPECT_EQ(sentence.substr(p->span.begin, p->span.size()), p->text) << sentence;
  }
  for (const auto& n : c.nested) check_clause(n, sentence);
}

TEST_F(ClauseTest, CorpusInvariants) {
  auto doc = corpus();
  auto extractions = extractor_.extract_document(doc);
  std::size_t sentences = 0;
  for (const auto& a : doc.articles) {
    for (const auto& item : a.items) sentences += item.sentences.size();
  }
  ASSERT_EQ(extractions.size(), sentences);
  for (const auto& e : extractions) {
    EXPECT_TRUE(!e.clauses.empty() || e.error.has_value()) << e.sentence;
    for (const auto& c : e.clauses) {
      check_clause(c, e.sentence);
      EXPECT_EQ(c.source.row_id, e.source.row_id);
      if (c.is_fallback_object) {
        auto toks = tagger_.tag(nlp::tokenize(e.sentence));
        auto groups = nlp::find_verb_groups(toks, tagger_.lexicon());
        bool matched = false;
        for (const auto& g : groups) {
          try {
            if (fallback_object(e.sentence, toks, g).text == c.object->text) matched = true;
          } catch (const Error&) {
          }
        }
        EXPECT_TRUE(matched) << e.sentence;
      }
    }
  }
}

}  // namespace
}  // namespace nisonto::clause
