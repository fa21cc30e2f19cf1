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

#ifndef NISONTO_COMPLIANCE_HPP_
#define NISONTO_COMPLIANCE_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nisonto/ontology.hpp"
#include "nisonto/rdf.hpp"

namespace nisonto::check {

struct Individual {
  rdf::Iri iri;
  std::set<rdf::Iri> types;
  std::set<std::pair<rdf::Iri, rdf::Iri>> assertions;  // (property, target)
};

class Abox {
 public:
  // Throws kInvalidAbox on a duplicate IRI.
  void add(Individual individual);
  // Throws kInvalidAbox when an assertion targets an unknown individual.
  void validate() const;

  const Individual* find(const rdf::Iri& iri) const;
  const std::map<rdf::Iri, Individual>& individuals() const { return individuals_; }

 private:
  std::map<rdf::Iri, Individual> individuals_;
};

// "MemberState" -> namespace + name; absolute IRIs pass through.
rdf::Iri resolve_name(std::string_view name, std::string_view ns);

// Reads either a bare JSON list of individuals or
// {"namespace": ..., "individuals": [...]}. Each individual is
// {"iri", "types": [...], "assertions": [{"property", "target"}]}; local
// names resolve against the namespace (default `ns`). Throws kInvalidAbox.
Abox parse_abox(std::string_view json_text, std::string_view ns = rdf::kDefaultNamespace);

// The existential restrictions the class is equivalent to, unfolding
// equivalentClass and intersectionOf, in list order. Throws kUnknownClass
// when the class is absent or defines no restrictions.
std::vector<onto::ExistentialRestriction> restrictions_of(const rdf::Graph& ontology,
                                                          const rdf::Iri& article_class);

struct ComplianceReport {
  rdf::Iri individual;
  rdf::Iri article_class;
  bool compliant = false;
  std::vector<onto::ExistentialRestriction> satisfied;
  std::vector<onto::ExistentialRestriction> missing;
  std::string mode;  // "equivalence" or "subclass"
};

// A restriction p some C holds when the individual asserts (p, x) and x is
// directly typed C. Throws kUnknownClass, kUnknownIndividual.
ComplianceReport check(const rdf::Graph& ontology, const Abox& abox, const rdf::Iri& individual,
                       const rdf::Iri& article_class);

// Every owl:Class named Article-<N>-<Entity>-Compliant, sorted.
std::vector<rdf::Iri> list_article_classes(const rdf::Graph& ontology);

std::string summary(const ComplianceReport& report);

}  // namespace nisonto::check

#endif  // NISONTO_COMPLIANCE_HPP_
