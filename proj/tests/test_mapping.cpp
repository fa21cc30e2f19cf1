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

#include <map>
#include <set>
#include <string>

#include "nisonto/clause.hpp"
#include "nisonto/document.hpp"
#include "nisonto/error.hpp"
#include "nisonto/lexicon.hpp"
#include "nisonto/mapping.hpp"
#include "nisonto/serialize.hpp"
#include "nisonto/tabulation.hpp"
#include "support/generators.hpp"

namespace nisonto::mapping {
namespace {

class MappingTest : public ::testing::Test {
 protected:
  MappingTest() : mapper_(nlp::Lexicon::builtin(), nlp::Gazetteer::builtin()) {}

  ErrorCode code_of(auto&& fn) const {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  }

  std::vector<tab::PosRow> corpus_rows() const {
    std::string src = io::read_file(std::string(NISONTO_DATA_DIR) + "/corpus/nis2_excerpt.txt");
    auto doc = ingest::parse_directive(src, {7, 37});
    nlp::Tagger tagger(nlp::Lexicon::builtin(), nlp::Gazetteer::builtin());
    clause::Extractor ex(tagger);
    auto extracted = tab::rows_from_extractions(ex.extract_document(doc));
    std::vector<tab::GoldAnnotation> gold;
    for (const auto& r : extracted) gold.push_back({r.article, r.row_id, "", "", "", r.passive});
    return tab::tabulate(gold, extracted);
  }

  Mapper mapper_;
};

TEST_F(MappingTest, EntityFromGazetteer) {
  EXPECT_EQ(mapper_.normalize_entity("Member States"), (EntityName{"MemberState", "MS"}));
  EXPECT_EQ(mapper_.normalize_entity("Each Member State"), (EntityName{"MemberState", "MS"}));
  EXPECT_EQ(mapper_.normalize_entity("The European External Action Service"),
            (EntityName{"EuropeanExternalActionService", "EEAS"}));
  EXPECT_EQ(mapper_.normalize_entity("competent authorities").canonical, "CompetentAuthority");
  EXPECT_EQ(mapper_.normalize_entity("MS").canonical, "MemberState");
  EXPECT_EQ(mapper_.normalize_entity("CSIRTs").canonical, "CSIRT");
}

TEST_F(MappingTest, ModifiersBeforeAGazetteerName) {
  EXPECT_EQ(mapper_.normalize_entity("Each single point of contact"),
            (EntityName{"SinglePointOfContact", std::nullopt}));
  EXPECT_EQ(mapper_.normalize_entity("other competent authorities").canonical, "CompetentAuthority");
}

TEST_F(MappingTest, CoordinatedEntityJoins) {
  EntityName e = mapper_.normalize_entity("ESA - CA");
  EXPECT_EQ(e.canonical, "EuropeanSupervisoryAuthorityAndCompetentAuthority");
  EXPECT_FALSE(e.acronym.has_value());
  EXPECT_NE(mapper_.normalize_entity("The Commission and ENISA").canonical.find("And"),
            std::string::npos);
}

TEST_F(MappingTest, EntityErrors) {
  EXPECT_EQ(code_of([&] { mapper_.normalize_entity(""); }), ErrorCode::kUnknownEntity);
  EXPECT_EQ(code_of([&] { mapper_.normalize_entity("their"); }), ErrorCode::kUnknownEntity);
}

TEST_F(MappingTest, EntityIsAFixpoint) {
  for (std::string s : {"Member States", "the single points of contact", "ESA - CA", "CSIRTs",
                        "The European External Action Service", "national regulatory bodies",
                        "the Cooperation Group"}) {
    EntityName once = mapper_.normalize_entity(s);
    EXPECT_EQ(mapper_.normalize_entity(once.canonical), once) << s;
  }
}

TEST_F(MappingTest, PredicateNames) {
  PredicateName p = mapper_.name_predicate("shall ensure");
  EXPECT_EQ(p.name, "ensure");
  EXPECT_FALSE(p.passive);
  p = mapper_.name_predicate("shall be composed");
  EXPECT_EQ(p.name, "compose");
  EXPECT_TRUE(p.passive);
  EXPECT_TRUE(mapper_.name_predicate("P - composed").passive);
  EXPECT_EQ(mapper_.name_predicate("shall, where appropriate, adopt").name, "adopt");
  EXPECT_EQ(code_of([&] { mapper_.name_predicate("shall"); }), ErrorCode::kEmptyPredicate);
  EXPECT_EQ(code_of([&] { mapper_.name_predicate(""); }), ErrorCode::kEmptyPredicate);
}

TEST_F(MappingTest, ObjectNames) {
  EXPECT_EQ(mapper_.name_object("a work programme"), "WorkProgramme");
  EXPECT_EQ(mapper_.name_object("the single point of contact"), "SinglePOC");
  EXPECT_EQ(mapper_.name_object("a national cybersecurity strategy and an incident response plan"),
            "NCS-IncidentResponsePlan");
  EXPECT_EQ(mapper_.name_object("that their competent authorities have adequate resources"),
            "CA-HaveAdequateResources");
  EXPECT_EQ(code_of([&] { mapper_.name_object("the"); }), ErrorCode::kEmptyObjectName);
  EXPECT_EQ(code_of([&] { mapper_.name_object(""); }), ErrorCode::kEmptyObjectName);
}

TEST_F(MappingTest, LongObjectIsCutAndHashed) {
  std::string obj;
  testing::Gen gen(11);
  while (obj.size() < 300) obj += gen.word(4, 9) + " ";
  std::string a = mapper_.name_object(obj, 80);
  EXPECT_EQ(a, mapper_.name_object(obj, 80));
  EXPECT_LE(a.size(), 80u);
  ASSERT_GT(a.size(), 7u);
  EXPECT_EQ(a[a.size() - 7], '-');
  EXPECT_EQ(a.find_first_not_of("0123456789abcdef", a.size() - 6), std::string::npos);
  std::string b = mapper_.name_object(obj + "extra", 80);
  EXPECT_NE(a, b);
}

TEST_F(MappingTest, ObjectNamesFitAnyLimit) {
  testing::Gen gen(5);
  for (int i = 0; i < 300; ++i) {
    std::string obj;
    int n = gen.range(1, 40);
    for (int k = 0; k < n; ++k) obj += gen.word(2, 10) + (gen.coin(0.1) ? " and " : " ");
    std::size_t limit = static_cast<std::size_t>(gen.range(20, 120));
    std::string name = mapper_.name_object(obj, limit);
    EXPECT_LE(name.size(), limit) << obj;
    EXPECT_FALSE(name.empty());
    EXPECT_EQ(name.find(' '), std::string::npos);
  }
}

tab::PosRow row(std::string id, std::string s, std::string v, std::string o,
                tab::HitMark hit = tab::HitMark::kCorrect) {
  tab::PosRow r;
  r.article = 8;
  r.row_id = std::move(id);
  r.extracted_subject = s;
  r.extracted_verb = v;
  r.extracted_object = o;
  r.subject_hit = r.verb_hit = r.object_hit = hit;
  return r;
}

TEST_F(MappingTest, DictionaryGroupsByArticleAndEntity) {
  std::vector<tab::PosRow> rows = {
      row("1", "Each Member State", "shall designate", "a competent authority"),
      row("2", "Member States", "shall adopt", "a national cybersecurity strategy"),
      row("3", "The Commission", "shall adopt", "implementing acts"),
      row("4", "", "shall adopt", "x"),
  };
  DataDictionary d = mapper_.build_dictionary(rows);
  ASSERT_EQ(d.groups.size(), 2u);
  const auto& ms = d.groups.at({8, "MemberState"});
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].predicate, "designate");
  EXPECT_EQ(ms[0].object_class, "CA");
  EXPECT_EQ(ms[1].source_row, "2");
  EXPECT_EQ(d.measure_count(), 3u);
  ASSERT_EQ(d.review.size(), 1u);
  EXPECT_EQ(d.review[0].row_id, "4");
  EXPECT_EQ(d.review[0].slot, "subject");
  EXPECT_EQ(group_key_string({8, "MemberState"}), "8:MemberState");
}

TEST_F(MappingTest, GoldReplacesWrongSlots) {
  tab::PosRow r = row("1", "their", "shall designate", "x", tab::HitMark::kWrong);
  r.gold_subject = "Member States";
  r.gold_verb = "designate";
  r.gold_object = "a competent authority";
  auto with_gold = mapper_.build_dictionary({r}, true);
  ASSERT_EQ(with_gold.measure_count(), 1u);
  EXPECT_TRUE(with_gold.groups.begin()->second[0].from_gold);
  EXPECT_EQ(with_gold.groups.begin()->second[0].object_class, "CA");
  auto extracted_only = mapper_.build_dictionary({r}, false);
  EXPECT_EQ(extracted_only.measure_count(), 0u);
  EXPECT_EQ(extracted_only.review.size(), 1u);
}

TEST_F(MappingTest, CorpusCountsReconcile) {
  auto rows = corpus_rows();
  ASSERT_FALSE(rows.empty());
  DataDictionary d = mapper_.build_dictionary(rows, false);
  EXPECT_EQ(d.measure_count() + d.review.size(), rows.size());
  EXPECT_GT(d.measure_count(), rows.size() / 2);
}

TEST_F(MappingTest, CorpusNamesDoNotCollide) {
  auto rows = corpus_rows();
  DataDictionary d = mapper_.build_dictionary(rows, false);
  for (const auto& [key, measures] : d.groups) {
    for (const auto& m : measures) {
      EXPECT_EQ(m.article, key.first);
      EXPECT_EQ(m.entity.canonical, key.second);
      EXPECT_FALSE(m.predicate.empty());
      EXPECT_FALSE(m.object_class.empty());
      EXPECT_LE(m.object_class.size(), kDefaultMaxObjectLength);
    }
  }
  // Distinct objects get distinct class names.
  std::map<std::string, std::string> seen;
  for (const auto& r : rows) {
    std::string obj = tab::alternatives(r.extracted_object).front();
    std::string norm = tab::normalize(obj);
    if (norm.empty() || norm == "none") continue;
    std::string name;
    try {
      name = mapper_.name_object(obj);
    } catch (const Error&) {
      continue;
    }
    auto [it, fresh] = seen.emplace(name, norm);
    if (!fresh) {
      EXPECT_EQ(it->second, norm) << name;
    }
  }
}

}  // namespace
}  // namespace nisonto::mapping
