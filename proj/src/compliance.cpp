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

#include "nisonto/compliance.hpp"

#include <algorithm>
#include <regex>

#include <json.hpp>

#include "nisonto/error.hpp"

namespace nisonto::check {

namespace {

using nlohmann::json;

bool is_absolute(std::string_view s) {
  std::size_t colon = s.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  return std::all_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(colon), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '+' || c == '-' || c == '.';
  });
}

std::string local_name(const std::string& iri) {
  std::size_t cut = iri.find_last_of("/#");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

const std::string& require_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(ErrorCode::kInvalidAbox, where + ": missing string field \"" + key + "\"");
  }
  return it->get_ref<const std::string&>();
}

std::optional<onto::ExistentialRestriction> as_restriction(const rdf::Graph& g, const rdf::Term& node) {
  if (!g.contains({node, rdf::vocab::kType, rdf::vocab::kRestriction})) return std::nullopt;
  auto p = g.objects(node, rdf::vocab::kOnProperty);
  auto c = g.objects(node, rdf::vocab::kSomeValuesFrom);
  if (p.size() != 1 || c.size() != 1 || !rdf::is_iri(p[0]) || !rdf::is_iri(c[0])) return std::nullopt;
  return onto::ExistentialRestriction{std::get<rdf::Iri>(p[0]), std::get<rdf::Iri>(c[0])};
}

void unfold(const rdf::Graph& g, const rdf::Term& node, std::set<rdf::Term>& seen,
            std::vector<onto::ExistentialRestriction>& out) {
  if (!seen.insert(node).second) return;
  if (auto r = as_restriction(g, node)) {
    out.push_back(*r);
    return;
  }
  for (const auto& list : g.objects(node, rdf::vocab::kIntersectionOf)) {
    if (auto members = g.read_list(list)) {
      for (const auto& m : *members) unfold(g, m, seen, out);
    }
  }
  for (const auto& eq : g.objects(node, rdf::vocab::kEquivalentClass)) unfold(g, eq, seen, out);
}

}  // namespace

void Abox::add(Individual individual) {
  rdf::Iri key = individual.iri;
  if (!individuals_.emplace(key, std::move(individual)).second) {
    throw Error(ErrorCode::kInvalidAbox, "duplicate individual <" + key.value + ">");
  }
}

void Abox::validate() const {
  for (const auto& [iri, ind] : individuals_) {
    for (const auto& [p, target] : ind.assertions) {
      if (!individuals_.contains(target)) {
        throw Error(ErrorCode::kInvalidAbox, "<" + iri.value + "> asserts <" + p.value +
                                                 "> to unknown individual <" + target.value + ">");
      }
    }
  }
}

const Individual* Abox::find(const rdf::Iri& iri) const {
  auto it = individuals_.find(iri);
  return it == individuals_.end() ? nullptr : &it->second;
}

rdf::Iri resolve_name(std::string_view name, std::string_view ns) {
  if (is_absolute(name)) return rdf::Iri{std::string(name)};
  return rdf::Iri{std::string(ns) + onto::iri_local(name)};
}

Abox parse_abox(std::string_view json_text, std::string_view ns) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidAbox, e.what());
  }
  std::string base(ns);
  const json* list = &doc;
  if (doc.is_object()) {
    if (doc.contains("namespace")) base = require_string(doc, "namespace", "abox");
    auto it = doc.find("individuals");
    if (it == doc.end()) throw Error(ErrorCode::kInvalidAbox, "abox: missing \"individuals\"");
    list = &*it;
  }
  if (!list->is_array()) throw Error(ErrorCode::kInvalidAbox, "abox: individuals must be a list");

  Abox abox;
  std::size_t index = 0;
  for (const auto& entry : *list) {
    std::string where = "individual #" + std::to_string(index++);
    if (!entry.is_object()) throw Error(ErrorCode::kInvalidAbox, where + ": not an object");
    Individual ind;
    ind.iri = resolve_name(require_string(entry, "iri", where), base);
    if (auto t = entry.find("types"); t != entry.end()) {
      if (!t->is_array()) throw Error(ErrorCode::kInvalidAbox, where + ": types must be a list");
      for (const auto& ty : *t) {
        if (!ty.is_string()) throw Error(ErrorCode::kInvalidAbox, where + ": type must be a string");
        ind.types.insert(resolve_name(ty.get<std::string>(), base));
      }
    }
    if (auto a = entry.find("assertions"); a != entry.end()) {
      if (!a->is_array()) throw Error(ErrorCode::kInvalidAbox, where + ": assertions must be a list");
      for (const auto& as : *a) {
        if (!as.is_object()) throw Error(ErrorCode::kInvalidAbox, where + ": assertion must be an object");
        ind.assertions.emplace(resolve_name(require_string(as, "property", where), base),
                               resolve_name(require_string(as, "target", where), base));
      }
    }
    abox.add(std::move(ind));
  }
  abox.validate();
  return abox;
}

std::vector<onto::ExistentialRestriction> restrictions_of(const rdf::Graph& ontology,
                                                          const rdf::Iri& article_class) {
  if (ontology.match(rdf::Term(article_class), std::nullopt, std::nullopt).empty()) {
    throw Error(ErrorCode::kUnknownClass, "<" + article_class.value + "> is not in the ontology");
  }
  std::vector<onto::ExistentialRestriction> out;
  std::set<rdf::Term> seen;
  for (const auto& eq : ontology.objects(article_class, rdf::vocab::kEquivalentClass)) {
    unfold(ontology, eq, seen, out);
  }
  if (out.empty()) {
    throw Error(ErrorCode::kUnknownClass, "<" + article_class.value + "> defines no restrictions");
  }
  return out;
}

ComplianceReport check(const rdf::Graph& ontology, const Abox& abox, const rdf::Iri& individual,
                       const rdf::Iri& article_class) {
  auto restrictions = restrictions_of(ontology, article_class);
  const Individual* ind = abox.find(individual);
  if (ind == nullptr) {
    throw Error(ErrorCode::kUnknownIndividual, "<" + individual.value + "> is not in the abox");
  }
  ComplianceReport report;
  report.individual = individual;
  report.article_class = article_class;
  report.mode = ontology.match(rdf::Term(article_class), rdf::vocab::kSubClassOf, std::nullopt).empty()
                    ? "equivalence"
                    : "subclass";
  for (const auto& r : restrictions) {
    bool ok = false;
    for (const auto& [p, target] : ind->assertions) {
      if (!(p == r.property)) continue;
      const Individual* t = abox.find(target);
      if (t != nullptr && t->types.contains(r.filler)) {
        ok = true;
        break;
      }
    }
    (ok ? report.satisfied : report.missing).push_back(r);
  }
  report.compliant = report.missing.empty();
  return report;
}

std::vector<rdf::Iri> list_article_classes(const rdf::Graph& ontology) {
  static const std::regex kPattern("^Article-[0-9]+-.+-Compliant$");
  std::set<rdf::Iri> out;
  for (const auto& t : ontology.match(std::nullopt, rdf::vocab::kType, rdf::vocab::kOwlClass)) {
    if (!rdf::is_iri(t.subject)) continue;
    const auto& iri = std::get<rdf::Iri>(t.subject);
    if (std::regex_match(local_name(iri.value), kPattern)) out.insert(iri);
  }
  return {out.begin(), out.end()};
}

std::string summary(const ComplianceReport& report) {
  std::string out = "<" + report.individual.value + "> is " +
                    (report.compliant ? "compliant" : "NOT compliant") + " with <" +
                    report.article_class.value + "> (" + std::to_string(report.satisfied.size()) +
                    "/" + std::to_string(report.satisfied.size() + report.missing.size()) +
                    " measures, " + report.mode + " mode)\n";
  for (const auto& r : report.missing) {
    out += "  missing: " + local_name(r.property.value) + " some " + local_name(r.filler.value) + "\n";
  }
  return out;
}

}  // namespace nisonto::check
