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

#ifndef NISONTO_RDF_HPP_
#define NISONTO_RDF_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace nisonto::rdf {

struct Iri {
  std::string value;
  bool operator==(const Iri&) const = default;
  bool operator<(const Iri& o) const { return value < o.value; }
};

struct BlankNode {
  std::string label;
  bool operator==(const BlankNode&) const = default;
  bool operator<(const BlankNode& o) const { return label < o.label; }
};

struct Literal {
  std::string lexical;
  std::string datatype;  // empty for a plain string
  std::string language;
  bool operator==(const Literal&) const = default;
  bool operator<(const Literal& o) const {
    return std::tie(lexical, datatype, language) < std::tie(o.lexical, o.datatype, o.language);
  }
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  bool operator==(const Triple&) const = default;
  bool operator<(const Triple& o) const {
    return std::tie(subject, predicate, object) < std::tie(o.subject, o.predicate, o.object);
  }
};

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline Iri rdf(std::string_view local) { return Iri{std::string(kRdf) + std::string(local)}; }
inline Iri rdfs(std::string_view local) { return Iri{std::string(kRdfs) + std::string(local)}; }
inline Iri owl(std::string_view local) { return Iri{std::string(kOwl) + std::string(local)}; }

inline const Iri kType = rdf("type");
inline const Iri kFirst = rdf("first");
inline const Iri kRest = rdf("rest");
inline const Iri kNil = rdf("nil");
inline const Iri kSubClassOf = rdfs("subClassOf");
inline const Iri kOwlClass = owl("Class");
inline const Iri kRestriction = owl("Restriction");
inline const Iri kOnProperty = owl("onProperty");
inline const Iri kSomeValuesFrom = owl("someValuesFrom");
inline const Iri kIntersectionOf = owl("intersectionOf");
inline const Iri kEquivalentClass = owl("equivalentClass");
}  // namespace vocab

inline constexpr std::string_view kDefaultNamespace = "http://nas.onto/";

// A set of triples plus the namespace used to mint local IRIs. Blank node
// labels are `<prefix>b<n>` in creation order.
class Graph {
 public:
  explicit Graph(std::string ns = std::string(kDefaultNamespace)) : ns_(std::move(ns)) {}

  const std::string& ns() const { return ns_; }
  void set_ns(std::string ns) { ns_ = std::move(ns); }
  Iri iri(std::string_view local) const { return Iri{ns_ + std::string(local)}; }

  void set_blank_prefix(std::string prefix) { blank_prefix_ = std::move(prefix); }
  BlankNode fresh_blank();

  // Returns false when the triple was already present. Throws kInvalidInput
  // for a literal subject or a relative IRI.
  bool add(const Term& s, const Iri& p, const Term& o);
  bool add(const Triple& t) { return add(t.subject, t.predicate, t.object); }
  bool contains(const Triple& t) const { return triples_.contains(t); }

  // Appends an RDF collection and returns its head (rdf:nil when empty).
  Term add_list(const std::vector<Term>& items);
  // Members of the list starting at `head`; nullopt when it is not a
  // well-formed collection.
  std::optional<std::vector<Term>> read_list(const Term& head) const;

  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;
  std::vector<Term> objects(const Term& s, const Iri& p) const;
  std::optional<Term> object(const Term& s, const Iri& p) const;

  void merge(const Graph& other);

  const std::set<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

 private:
  std::string ns_;
  std::string blank_prefix_;
  std::size_t next_blank_ = 0;
  std::set<Triple> triples_;
};

// Equality up to a bijective renaming of blank nodes.
bool isomorphic(const Graph& a, const Graph& b);

// N-Triples style rendering, for messages and tests.
std::string to_string(const Term& t);
std::string to_string(const Triple& t);

}  // namespace nisonto::rdf

#endif  // NISONTO_RDF_HPP_
