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

#include "nisonto/ontology.hpp"

#include <cstdio>

#include "nisonto/error.hpp"
#include "nisonto/text.hpp"

namespace nisonto::onto {

rdf::BlankNode add_restriction(rdf::Graph& g, const ExistentialRestriction& r) {
  rdf::BlankNode node = g.fresh_blank();
  g.add(node, rdf::vocab::kType, rdf::vocab::kRestriction);
  g.add(node, rdf::vocab::kOnProperty, r.property);
  g.add(node, rdf::vocab::kSomeValuesFrom, r.filler);
  return node;
}

std::string compliant_class_name(int article, std::string_view entity) {
  return "Article-" + std::to_string(article) + "-" + std::string(entity) + "-Compliant";
}

std::string measures_class_name(int article, std::string_view entity) {
  return "Article-" + std::to_string(article) + "-" + std::string(entity) + "-Measures";
}

std::string iri_local(std::string_view name) {
  std::string out;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if ((u < 0x80 && text::is_alnum(c)) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += c;
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", u);
      out += buf;
    }
  }
  return out;
}

rdf::Iri build_article_module(rdf::Graph& g, int article, const mapping::EntityName& entity,
                              const std::vector<mapping::MeasureSpec>& measures,
                              const BuildOptions& options) {
  using namespace rdf::vocab;
  if (measures.empty()) {
    throw Error(ErrorCode::kEmptyMeasures, "article " + std::to_string(article) + " entity " +
                                               entity.canonical + " has no measures");
  }
  auto local = [&](std::string_view name) { return rdf::Iri{options.ns + iri_local(name)}; };

  std::vector<rdf::Term> restrictions;
  for (const auto& m : measures) {
    restrictions.push_back(add_restriction(g, {local(m.predicate), local(m.object_class)}));
  }

  rdf::Term body = restrictions.front();
  if (restrictions.size() > 1) {
    rdf::Term c = options.named_measures
                      ? rdf::Term(local(measures_class_name(article, entity.canonical)))
                      : rdf::Term(g.fresh_blank());
    g.add(c, kIntersectionOf, g.add_list(restrictions));
    g.add(c, kType, kOwlClass);
    body = c;
  }

  rdf::Iri compliant = local(compliant_class_name(article, entity.canonical));
  g.add(compliant, kEquivalentClass, body);
  g.add(compliant, kType, kOwlClass);

  rdf::Iri subject = local(entity.canonical);
  g.add(subject, kType, kOwlClass);
  if (options.subclass_mode) {
    g.add(compliant, kSubClassOf, subject);
  } else {
    g.add(subject, kEquivalentClass, compliant);
  }
  return compliant;
}

Ontology build_ontology(const mapping::DataDictionary& dictionary, const BuildOptions& options) {
  Ontology out;
  out.merged.set_ns(options.ns);
  for (const auto& [key, measures] : dictionary.groups) {
    const auto& [article, canonical] = key;
    rdf::Graph module(options.ns);
    module.set_blank_prefix("a" + std::to_string(article) + "_" + iri_local(canonical) + "_");
    build_article_module(module, article, measures.front().entity, measures, options);
    auto [it, inserted] = out.per_article.try_emplace(article, rdf::Graph(options.ns));
    it->second.merge(module);
    out.merged.merge(module);
  }
  return out;
}

}  // namespace nisonto::onto
