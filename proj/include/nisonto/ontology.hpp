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

#ifndef NISONTO_ONTOLOGY_HPP_
#define NISONTO_ONTOLOGY_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nisonto/mapping.hpp"
#include "nisonto/rdf.hpp"

namespace nisonto::onto {

struct ExistentialRestriction {
  rdf::Iri property;
  rdf::Iri filler;

  bool operator==(const ExistentialRestriction&) const = default;
  bool operator<(const ExistentialRestriction& o) const {
    return std::tie(property, filler) < std::tie(o.property, o.filler);
  }
};

struct BuildOptions {
  std::string ns = std::string(rdf::kDefaultNamespace);
  bool named_measures = false;  // name the intersection Article-N-Entity-Measures
  bool subclass_mode = false;   // compliant rdfs:subClassOf entity instead of equivalence
};

// Adds the three triples of "property some filler" and returns the node.
rdf::BlankNode add_restriction(rdf::Graph& g, const ExistentialRestriction& r);

std::string compliant_class_name(int article, std::string_view entity);
std::string measures_class_name(int article, std::string_view entity);

// Percent-encodes anything outside [A-Za-z0-9._~-] so the name is safe as
// the local part of an IRI.
std::string iri_local(std::string_view name);

// Builds one article/entity module into `g` and returns the compliant class.
// A single measure is equated directly to its restriction. Throws
// kEmptyMeasures.
rdf::Iri build_article_module(rdf::Graph& g, int article, const mapping::EntityName& entity,
                              const std::vector<mapping::MeasureSpec>& measures,
                              const BuildOptions& options = {});

struct Ontology {
  std::map<int, rdf::Graph> per_article;
  rdf::Graph merged;
};

// One module per dictionary group. Blank node labels are prefixed by the
// module ("a8_MemberState_b0") so per-article graphs merge without clashes.
Ontology build_ontology(const mapping::DataDictionary& dictionary, const BuildOptions& options = {});

}  // namespace nisonto::onto

#endif  // NISONTO_ONTOLOGY_HPP_
