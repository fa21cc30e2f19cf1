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

#include "nisonto/rdf.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nisonto/error.hpp"

namespace nisonto::rdf {

namespace {

bool is_absolute(std::string_view iri) {
  std::size_t colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    char c = iri[i];
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (i > 0 && ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'));
    if (!ok) return false;
  }
  return true;
}

std::string escape_literal(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

using ColorMap = std::map<std::string, std::size_t>;

std::vector<std::string> blank_labels(const Graph& g) {
  std::set<std::string> out;
  for (const auto& t : g.triples()) {
    if (is_blank(t.subject)) out.insert(std::get<BlankNode>(t.subject).label);
    if (is_blank(t.object)) out.insert(std::get<BlankNode>(t.object).label);
  }
  return {out.begin(), out.end()};
}

std::string term_key(const Term& t, const ColorMap& colors) {
  if (is_blank(t)) return "_" + std::to_string(colors.at(std::get<BlankNode>(t).label));
  return to_string(t);
}

// One refinement round shared by both graphs so colors stay comparable.
void refine(const Graph& g, const ColorMap& in, ColorMap& out,
            std::map<std::string, std::size_t>& palette) {
  std::map<std::string, std::vector<std::string>> sig;
  for (const auto& [label, c] : in) sig[label].push_back("#" + std::to_string(c));
  for (const auto& t : g.triples()) {
    if (is_blank(t.subject)) {
      sig[std::get<BlankNode>(t.subject).label].push_back(">" + t.predicate.value + " " +
                                                           term_key(t.object, in));
    }
    if (is_blank(t.object)) {
      sig[std::get<BlankNode>(t.object).label].push_back("<" + t.predicate.value + " " +
                                                          term_key(t.subject, in));
    }
  }
  for (auto& [label, parts] : sig) {
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) {
      s += p;
      s += '\n';
    }
    auto [it, inserted] = palette.emplace(s, palette.size());
    out[label] = it->second;
  }
}

std::size_t distinct(const ColorMap& m) {
  std::set<std::size_t> s;
  for (const auto& [k, v] : m) s.insert(v);
  return s.size();
}

}  // namespace

BlankNode Graph::fresh_blank() {
  return BlankNode{blank_prefix_ + "b" + std::to_string(next_blank_++)};
}

bool Graph::add(const Term& s, const Iri& p, const Term& o) {
  if (is_literal(s)) throw Error(ErrorCode::kInvalidInput, "literal used as triple subject");
  auto check = [](const Term& t) {
    if (is_iri(t) && !is_absolute(std::get<Iri>(t).value)) {
      throw Error(ErrorCode::kInvalidInput, "relative IRI <" + std::get<Iri>(t).value + ">");
    }
  };
  check(s);
  check(p);
  check(o);
  return triples_.insert(Triple{s, p, o}).second;
}

Term Graph::add_list(const std::vector<Term>& items) {
  if (items.empty()) return vocab::kNil;
  std::vector<BlankNode> cells;
  for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
  for (std::size_t i = 0; i < items.size(); ++i) {
    add(cells[i], vocab::kFirst, items[i]);
    add(cells[i], vocab::kRest, i + 1 < items.size() ? Term(cells[i + 1]) : Term(vocab::kNil));
  }
  return cells.front();
}

std::optional<std::vector<Term>> Graph::read_list(const Term& head) const {
  std::vector<Term> out;
  std::set<Term> visited;
  Term cur = head;
  while (!(is_iri(cur) && std::get<Iri>(cur) == vocab::kNil)) {
    if (!is_blank(cur) || !visited.insert(cur).second) return std::nullopt;
    auto first = objects(cur, vocab::kFirst);
    auto rest = objects(cur, vocab::kRest);
    if (first.size() != 1 || rest.size() != 1) return std::nullopt;
    out.push_back(first.front());
    cur = rest.front();
  }
  return out;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  auto begin = triples_.begin();
  auto end = triples_.end();
  if (s) {
    // Triples are ordered by subject first.
    begin = std::lower_bound(triples_.begin(), triples_.end(), *s,
                             [](const Triple& t, const Term& v) { return t.subject < v; });
    end = std::upper_bound(begin, triples_.end(), *s,
                           [](const Term& v, const Triple& t) { return v < t.subject; });
  }
  for (auto it = begin; it != end; ++it) {
    if (p && !(it->predicate == *p)) continue;
    if (o && !(it->object == *o)) continue;
    out.push_back(*it);
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Iri& p) const {
  std::vector<Term> out;
  for (const auto& t : match(s, p, std::nullopt)) out.push_back(t.object);
  return out;
}

std::optional<Term> Graph::object(const Term& s, const Iri& p) const {
  auto all = objects(s, p);
  if (all.empty()) return std::nullopt;
  return all.front();
}

void Graph::merge(const Graph& other) {
  for (const auto& t : other.triples()) triples_.insert(t);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> ba = blank_labels(a);
  std::vector<std::string> bb = blank_labels(b);
  if (ba.size() != bb.size()) return false;
  for (const auto& t : a.triples()) {
    if (!is_blank(t.subject) && !is_blank(t.object) && !b.contains(t)) return false;
  }

  ColorMap ca, cb;
  for (const auto& l : ba) ca[l] = 0;
  for (const auto& l : bb) cb[l] = 0;
  std::size_t classes = 1;
  for (std::size_t round = 0; round <= ba.size(); ++round) {
    std::map<std::string, std::size_t> palette;
    ColorMap na, nb;
    refine(a, ca, na, palette);
    refine(b, cb, nb, palette);
    ca.swap(na);
    cb.swap(nb);
    std::size_t now = distinct(ca);
    if (now == classes && round > 0) break;
    classes = now;
  }
  std::map<std::size_t, std::vector<std::string>> class_a, class_b;
  for (const auto& [l, c] : ca) class_a[c].push_back(l);
  for (const auto& [l, c] : cb) class_b[c].push_back(l);
  if (class_a.size() != class_b.size()) return false;
  for (const auto& [c, members] : class_a) {
    auto it = class_b.find(c);
    if (it == class_b.end() || it->second.size() != members.size()) return false;
  }

  // Backtracking over same-colored candidates, smallest classes first.
  std::vector<std::string> order = ba;
  std::stable_sort(order.begin(), order.end(), [&](const std::string& x, const std::string& y) {
    return class_a[ca[x]].size() < class_a[ca[y]].size();
  });
  std::map<std::string, std::vector<const Triple*>> incident;
  for (const auto& t : a.triples()) {
    if (is_blank(t.subject)) incident[std::get<BlankNode>(t.subject).label].push_back(&t);
    if (is_blank(t.object)) incident[std::get<BlankNode>(t.object).label].push_back(&t);
  }
  std::map<std::string, std::string> mapping;
  std::set<std::string> used;
  auto map_term = [&](const Term& t, bool* complete) -> Term {
    if (!is_blank(t)) return t;
    auto it = mapping.find(std::get<BlankNode>(t).label);
    if (it == mapping.end()) {
      *complete = false;
      return t;
    }
    return BlankNode{it->second};
  };
  std::function<bool(std::size_t)> solve = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const std::string& x = order[i];
    for (const auto& y : class_b[ca[x]]) {
      if (used.contains(y)) continue;
      mapping[x] = y;
      used.insert(y);
      bool ok = true;
      for (const Triple* t : incident[x]) {
        bool complete = true;
        Triple m{map_term(t->subject, &complete), t->predicate, map_term(t->object, &complete)};
        if (complete && !b.contains(m)) {
          ok = false;
          break;
        }
      }
      if (ok && solve(i + 1)) return true;
      used.erase(y);
      mapping.erase(x);
    }
    return false;
  };
  return solve(0);
}

std::string to_string(const Term& t) {
  if (is_iri(t)) return "<" + std::get<Iri>(t).value + ">";
  if (is_blank(t)) return "_:" + std::get<BlankNode>(t).label;
  const Literal& l = std::get<Literal>(t);
  std::string out = "\"" + escape_literal(l.lexical) + "\"";
  if (!l.language.empty()) {
    out += "@" + l.language;
  } else if (!l.datatype.empty()) {
    out += "^^<" + l.datatype + ">";
  }
  return out;
}

std::string to_string(const Triple& t) {
  return to_string(t.subject) + " " + to_string(Term(t.predicate)) + " " + to_string(t.object) +
         " .";
}

}  // namespace nisonto::rdf
