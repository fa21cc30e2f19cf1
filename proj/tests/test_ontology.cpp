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

#include "nisonto/error.hpp"
#include "nisonto/ontology.hpp"
#include "nisonto/rdf.hpp"
#include "nisonto/turtle.hpp"
#include "support/generators.hpp"

namespace nisonto::onto {
namespace {

using rdf::BlankNode;
using rdf::Graph;
using rdf::Iri;
using rdf::Term;
namespace vocab = rdf::vocab;

mapping::MeasureSpec measure(std::string predicate, std::string object) {
  mapping::MeasureSpec m;
  m.article = 8;
  m.entity = {"MemberState", "MS"};
  m.predicate = std::move(predicate);
  m.object_class = std::move(object);
  return m;
}

TEST(Restriction, AddsThreeTriples) {
  Graph g;
  ExistentialRestriction r{g.iri("ensure"), g.iri("CA")};
  BlankNode a = add_restriction(g, r);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.contains({a, vocab::kType, vocab::kRestriction}));
  EXPECT_TRUE(g.contains({a, vocab::kOnProperty, r.property}));
  EXPECT_TRUE(g.contains({a, vocab::kSomeValuesFrom, r.filler}));
  BlankNode b = add_restriction(g, r);
  EXPECT_NE(a, b);
  EXPECT_EQ(g.size(), 6u);
}

TEST(Naming, ClassNamesAndEncoding) {
  EXPECT_EQ(compliant_class_name(8, "MemberState"), "Article-8-MemberState-Compliant");
  EXPECT_EQ(measures_class_name(14, "CA"), "Article-14-CA-Measures");
  EXPECT_EQ(iri_local("CA-SinglePOC_2.x~"), "CA-SinglePOC_2.x~");
  EXPECT_EQ(iri_local("a b/c"), "a%20b%2Fc");
}

// The module for two measures, written out triple by triple.
Graph expected_two_measure_module() {
  Graph g;
  Iri entity = g.iri("MemberState");
  Iri compliant = g.iri("Article-8-MemberState-Compliant");
  BlankNode r1 = g.fresh_blank(), r2 = g.fresh_blank(), body = g.fresh_blank();
  BlankNode cell1 = g.fresh_blank(), cell2 = g.fresh_blank();
  g.add(r1, vocab::kType, vocab::kRestriction);
  g.add(r1, vocab::kOnProperty, g.iri("ensure"));
  g.add(r1, vocab::kSomeValuesFrom, g.iri("CA-SinglePOC-HaveAdequateResources"));
  g.add(r2, vocab::kType, vocab::kRestriction);
  g.add(r2, vocab::kOnProperty, g.iri("designate"));
  g.add(r2, vocab::kSomeValuesFrom, g.iri("CA"));
  g.add(cell1, vocab::kFirst, r1);
  g.add(cell1, vocab::kRest, cell2);
  g.add(cell2, vocab::kFirst, r2);
  g.add(cell2, vocab::kRest, vocab::kNil);
  g.add(body, vocab::kType, vocab::kOwlClass);
  g.add(body, vocab::kIntersectionOf, cell1);
  g.add(compliant, vocab::kType, vocab::kOwlClass);
  g.add(compliant, vocab::kEquivalentClass, body);
  g.add(entity, vocab::kType, vocab::kOwlClass);
  g.add(entity, vocab::kEquivalentClass, compliant);
  return g;
}

TEST(Module, TwoMeasuresMatchHandBuiltGraph) {
  Graph g;
  Iri c = build_article_module(g, 8, {"MemberState", "MS"},
                               {measure("ensure", "CA-SinglePOC-HaveAdequateResources"),
                                measure("designate", "CA")});
  EXPECT_EQ(c.value, "http://nas.onto/Article-8-MemberState-Compliant");
  EXPECT_TRUE(rdf::isomorphic(g, expected_two_measure_module()));
}

TEST(Module, SingleMeasureEquatesToRestriction) {
  Graph g;
  Iri c = build_article_module(g, 9, {"CSIRT", "C"}, {measure("monitor", "Incident")});
  EXPECT_EQ(g.size(), 7u);
  EXPECT_TRUE(g.match(std::nullopt, vocab::kIntersectionOf, std::nullopt).empty());
  auto body = g.object(c, vocab::kEquivalentClass);
  ASSERT_TRUE(body.has_value());
  EXPECT_TRUE(g.contains({*body, vocab::kType, vocab::kRestriction}));
}

TEST(Module, EmptyMeasuresThrow) {
  Graph g;
  try {
    build_article_module(g, 8, {"MemberState", "MS"}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyMeasures);
  }
  EXPECT_TRUE(g.empty());
}

TEST(ModuleProperty, CountsAndShape) {
  testing::Gen gen(8);
  for (int round = 0; round < 200; ++round) {
    std::string entity = gen.camel();
    auto ms = gen.group(8, entity, 10);
    std::size_t k = ms.size();
    Graph g;
    Iri c = build_article_module(g, 8, {entity, std::nullopt}, ms);
    Iri e = g.iri(entity);
    EXPECT_EQ(g.size(), k == 1 ? 7u : 5 * k + 6) << k;
    EXPECT_EQ(g.objects(e, vocab::kEquivalentClass), std::vector<Term>{c});
    auto bodies = g.objects(c, vocab::kEquivalentClass);
    ASSERT_EQ(bodies.size(), 1u);
    if (k == 1) continue;
    auto members = g.read_list(*g.object(bodies[0], vocab::kIntersectionOf));
    ASSERT_TRUE(members.has_value());
    ASSERT_EQ(members->size(), k);
    for (std::size_t i = 0; i < k; ++i) {
      const Term& r = (*members)[i];
      EXPECT_TRUE(rdf::is_blank(r));
      EXPECT_TRUE(g.contains({r, vocab::kType, vocab::kRestriction}));
      EXPECT_EQ(g.object(r, vocab::kOnProperty), Term(g.iri(iri_local(ms[i].predicate))));
      EXPECT_EQ(g.object(r, vocab::kSomeValuesFrom), Term(g.iri(iri_local(ms[i].object_class))));
    }
  }
}

TEST(ModuleProperty, Deterministic) {
  testing::Gen gen(17);
  for (int round = 0; round < 50; ++round) {
    auto d = gen.dictionary();
    auto a = build_ontology(d);
    auto b = build_ontology(d);
    EXPECT_EQ(a.merged.triples(), b.merged.triples());
    EXPECT_EQ(rdf::serialize_turtle(a.merged), rdf::serialize_turtle(b.merged));
  }
}

TEST(Module, SubclassMode) {
  Graph g;
  BuildOptions opt;
  opt.subclass_mode = true;
  Iri c = build_article_module(g, 8, {"MemberState", "MS"},
                               {measure("ensure", "A"), measure("designate", "B")}, opt);
  Iri e = g.iri("MemberState");
  EXPECT_TRUE(g.contains({c, vocab::kSubClassOf, e}));
  EXPECT_TRUE(g.objects(e, vocab::kEquivalentClass).empty());
  EXPECT_EQ(g.size(), 16u);
}

TEST(Module, NamedMeasuresClass) {
  Graph g;
  BuildOptions opt;
  opt.named_measures = true;
  Iri c = build_article_module(g, 8, {"MemberState", "MS"},
                               {measure("ensure", "A"), measure("designate", "B")}, opt);
  Iri named = g.iri("Article-8-MemberState-Measures");
  EXPECT_EQ(g.objects(c, vocab::kEquivalentClass), std::vector<Term>{named});
  EXPECT_TRUE(g.contains({named, vocab::kType, vocab::kOwlClass}));
  EXPECT_EQ(g.size(), 16u);
}

TEST(Ontology, OneModulePerGroup) {
  mapping::DataDictionary d;
  d.groups[{8, "MemberState"}] = {measure("ensure", "A"), measure("designate", "B")};
  auto ca = measure("cooperate", "C");
  ca.entity = {"CompetentAuthority", "CA"};
  d.groups[{8, "CompetentAuthority"}] = {ca};
  auto csirt = measure("monitor", "D");
  csirt.article = 11;
  csirt.entity = {"CSIRT", "C"};
  d.groups[{11, "CSIRT"}] = {csirt};
  Ontology o = build_ontology(d);
  ASSERT_EQ(o.per_article.size(), 2u);
  EXPECT_EQ(o.per_article.at(8).size(), 16u + 7u);
  EXPECT_EQ(o.per_article.at(11).size(), 7u);
  EXPECT_EQ(o.merged.size(), 30u);
  std::string ttl = rdf::serialize_turtle(o.merged);
  EXPECT_TRUE(rdf::isomorphic(rdf::parse_turtle(ttl), o.merged));
}

}  // namespace
}  // namespace nisonto::onto
