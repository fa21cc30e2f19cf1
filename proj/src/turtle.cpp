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

#include "nisonto/turtle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "nisonto/error.hpp"
#include "nisonto/text.hpp"

namespace nisonto::rdf {

namespace {

// ---- writer ----

const std::vector<std::pair<std::string, std::string>>& vocab_prefixes() {
  static const std::vector<std::pair<std::string, std::string>> kPrefixes = {
      {"owl", std::string(vocab::kOwl)},
      {"rdf", std::string(vocab::kRdf)},
      {"rdfs", std::string(vocab::kRdfs)},
  };
  return kPrefixes;
}

bool is_plain_local(std::string_view local) {
  if (local.empty() || !text::is_alpha(local.front())) return false;
  return std::all_of(local.begin(), local.end(),
                     [](char c) { return text::is_alnum(c) || c == '_' || c == '-'; });
}

std::string render_iri(const Iri& iri) {
  for (const auto& [prefix, ns] : vocab_prefixes()) {
    if (iri.value.starts_with(ns) && is_plain_local(std::string_view(iri.value).substr(ns.size()))) {
      return prefix + ":" + iri.value.substr(ns.size());
    }
  }
  return "<" + iri.value + ">";
}

class Writer {
 public:
  explicit Writer(const Graph& g) : g_(g) {
    for (const auto& t : g.triples()) {
      by_subject_[t.subject].push_back(&t);
      if (is_blank(t.object)) ++refs_[std::get<BlankNode>(t.object).label];
    }
    for (const auto& [label, n] : refs_) {
      if (n > 1) {
        throw Error(ErrorCode::kCyclicBlankNodes,
                    "blank node _:" + label + " is referenced " + std::to_string(n) + " times");
      }
    }
  }

  std::string run() {
    std::string out;
    out += "@prefix ns: <" + g_.ns() + "> .\n";
    for (const auto& [prefix, ns] : vocab_prefixes()) out += "@prefix " + prefix + ": <" + ns + "> .\n";

    std::vector<std::string> blocks;
    std::vector<std::string> blank_roots;
    for (const auto& [subject, triples] : by_subject_) {
      if (is_iri(subject)) {
        blocks.push_back(render_iri(std::get<Iri>(subject)) + " " + render_pairs(subject, 4) +
                         " .\n");
      } else if (is_blank(subject) && !refs_.contains(std::get<BlankNode>(subject).label)) {
        blank_roots.push_back(render_blank(std::get<BlankNode>(subject), 0) + " .\n");
      }
    }
    std::sort(blank_roots.begin(), blank_roots.end());
    for (auto& b : blank_roots) blocks.push_back(std::move(b));

    for (const auto& [subject, triples] : by_subject_) {
      if (is_blank(subject) && !rendered_.contains(std::get<BlankNode>(subject).label)) {
        throw Error(ErrorCode::kCyclicBlankNodes,
                    "blank node _:" + std::get<BlankNode>(subject).label + " lies on a cycle");
      }
    }
    for (const auto& b : blocks) out += "\n" + b;
    return out;
  }

 private:
  static std::string pad(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

  const std::vector<const Triple*>& triples_of(const Term& t) const {
    static const std::vector<const Triple*> kNone;
    auto it = by_subject_.find(t);
    return it == by_subject_.end() ? kNone : it->second;
  }

  // A blank node that is exactly one rdf:first and one rdf:rest.
  bool is_list_cell(const BlankNode& b) const {
    const auto& ts = triples_of(b);
    if (ts.size() != 2) return false;
    int first = 0, rest = 0;
    for (const Triple* t : ts) {
      if (t->predicate == vocab::kFirst) ++first;
      if (t->predicate == vocab::kRest) ++rest;
    }
    return first == 1 && rest == 1;
  }

  std::optional<std::vector<Term>> as_list(const BlankNode& head) const {
    std::vector<Term> items;
    std::set<std::string> seen;
    Term cur = head;
    while (!(is_iri(cur) && std::get<Iri>(cur) == vocab::kNil)) {
      if (!is_blank(cur)) return std::nullopt;
      const BlankNode& b = std::get<BlankNode>(cur);
      if (!is_list_cell(b) || !seen.insert(b.label).second) return std::nullopt;
      Term next = vocab::kNil;
      for (const Triple* t : triples_of(b)) {
        if (t->predicate == vocab::kFirst) items.push_back(t->object);
        if (t->predicate == vocab::kRest) next = t->object;
      }
      cur = next;
    }
    return items;
  }

  std::string render_object(const Term& t, int indent) {
    if (is_iri(t)) return render_iri(std::get<Iri>(t));
    if (is_literal(t)) return to_string(t);
    return render_blank(std::get<BlankNode>(t), indent);
  }

  std::string render_blank(const BlankNode& b, int indent) {
    if (!rendered_.insert(b.label).second) {
      throw Error(ErrorCode::kCyclicBlankNodes, "blank node _:" + b.label + " lies on a cycle");
    }
    if (auto items = as_list(b)) {
      Term cur = b;
      while (is_blank(cur)) {
        rendered_.insert(std::get<BlankNode>(cur).label);
        cur = *g_.object(cur, vocab::kRest);
      }
      std::string out = "(";
      for (const auto& item : *items) out += "\n" + pad(indent + 2) + render_object(item, indent + 2);
      return out + " )";
    }
    if (triples_of(b).empty()) return "[]";
    return "[ " + render_pairs(b, indent + 2) + " ]";
  }

  std::string render_pairs(const Term& subject, int indent) {
    struct Pair {
      bool type = false;
      std::string predicate;
      std::string object;
    };
    std::vector<Pair> pairs;
    for (const Triple* t : triples_of(subject)) {
      bool type = t->predicate == vocab::kType;
      pairs.push_back({type, type ? "a" : render_iri(t->predicate), render_object(t->object, indent)});
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
      return std::tie(y.type, x.predicate, x.object) < std::tie(x.type, y.predicate, y.object);
    });
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0) out += " ;\n" + pad(indent);
      out += pairs[i].predicate + " " + pairs[i].object;
    }
    return out;
  }

  const Graph& g_;
  std::map<Term, std::vector<const Triple*>> by_subject_;
  std::map<std::string, int> refs_;
  std::set<std::string> rendered_;
};

// ---- reader ----

enum class Tok {
  kIri,
  kPName,
  kBlankLabel,
  kA,
  kString,
  kLangTag,
  kCaretCaret,
  kNumber,
  kBoolean,
  kPrefix,
  kBase,
  kLBracket,
  kRBracket,
  kLParen,
  kRParen,
  kSemicolon,
  kComma,
  kDot,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string value;
  int line = 1;
  int col = 1;
};

[[noreturn]] void syntax_error(int line, int col, const std::string& msg) {
  throw Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

bool is_pn_char(char c) {
  return text::is_alnum(c) || c == '_' || c == '-' || c == '.';
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      char c = s_[pos_];
      if (c == '<') {
        advance();
        std::string v;
        while (pos_ < s_.size() && s_[pos_] != '>') {
          if (s_[pos_] == '\n' || s_[pos_] == ' ') syntax_error(line_, col_, "unterminated IRI");
          v += s_[pos_];
          advance();
        }
        if (pos_ >= s_.size()) syntax_error(t.line, t.col, "unterminated IRI");
        advance();
        t.kind = Tok::kIri;
        t.value = std::move(v);
      } else if (c == '"') {
        t.kind = Tok::kString;
        t.value = read_string();
      } else if (c == '@') {
        advance();
        std::string w;
        while (pos_ < s_.size() && (text::is_alnum(s_[pos_]) || s_[pos_] == '-')) {
          w += s_[pos_];
          advance();
        }
        if (w == "prefix") {
          t.kind = Tok::kPrefix;
          t.value = "@";
        } else if (w == "base") {
          t.kind = Tok::kBase;
        } else if (!w.empty()) {
          t.kind = Tok::kLangTag;
          t.value = w;
        } else {
          syntax_error(t.line, t.col, "stray '@'");
        }
      } else if (c == '^') {
        advance();
        if (pos_ >= s_.size() || s_[pos_] != '^') syntax_error(t.line, t.col, "expected '^^'");
        advance();
        t.kind = Tok::kCaretCaret;
      } else if (c == '_' && pos_ + 1 < s_.size() && s_[pos_ + 1] == ':') {
        advance();
        advance();
        std::string v;
        while (pos_ < s_.size() && is_pn_char(s_[pos_])) {
          v += s_[pos_];
          advance();
        }
        while (!v.empty() && v.back() == '.') {
          v.pop_back();
          --pos_;
          --col_;
        }
        if (v.empty()) syntax_error(t.line, t.col, "empty blank node label");
        t.kind = Tok::kBlankLabel;
        t.value = std::move(v);
      } else if (c == '[' || c == ']' || c == '(' || c == ')' || c == ';' || c == ',') {
        advance();
        t.kind = c == '[' ? Tok::kLBracket : c == ']' ? Tok::kRBracket : c == '(' ? Tok::kLParen
                 : c == ')' ? Tok::kRParen : c == ';' ? Tok::kSemicolon : Tok::kComma;
      } else if (c == '.' && !(pos_ + 1 < s_.size() && text::is_digit(s_[pos_ + 1]))) {
        advance();
        t.kind = Tok::kDot;
      } else if (text::is_digit(c) || c == '-' || c == '+' || c == '.') {
        std::string v;
        while (pos_ < s_.size() && (text::is_digit(s_[pos_]) || s_[pos_] == '.' ||
                                    s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == 'e' ||
                                    s_[pos_] == 'E')) {
          v += s_[pos_];
          advance();
        }
        while (!v.empty() && v.back() == '.') {
          v.pop_back();
          --pos_;
          --col_;
        }
        t.kind = Tok::kNumber;
        t.value = std::move(v);
      } else if (text::is_alpha(c) || c == ':') {
        std::string v;
        while (pos_ < s_.size() && (is_pn_char(s_[pos_]) || s_[pos_] == ':')) {
          v += s_[pos_];
          advance();
        }
        while (!v.empty() && v.back() == '.') {
          v.pop_back();
          --pos_;
          --col_;
        }
        if (v == "a") {
          t.kind = Tok::kA;
        } else if (v == "true" || v == "false") {
          t.kind = Tok::kBoolean;
          t.value = v;
        } else if (text::iequals(v, "PREFIX")) {
          t.kind = Tok::kPrefix;
        } else if (text::iequals(v, "BASE")) {
          t.kind = Tok::kBase;
        } else if (v.find(':') != std::string::npos) {
          t.kind = Tok::kPName;
          t.value = std::move(v);
        } else {
          syntax_error(t.line, t.col, "unexpected word '" + v + "'");
        }
      } else {
        syntax_error(t.line, t.col, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < s_.size()) {
      if (text::is_space(s_[pos_])) {
        advance();
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string read_string() {
    int line = line_, col = col_;
    advance();
    std::string v;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      char c = s_[pos_];
      if (c == '\n') syntax_error(line, col, "unterminated string");
      if (c == '\\') {
        advance();
        if (pos_ >= s_.size()) break;
        char e = s_[pos_];
        switch (e) {
          case 'n': v += '\n'; break;
          case 'r': v += '\r'; break;
          case 't': v += '\t'; break;
          case '"': v += '"'; break;
          case '\\': v += '\\'; break;
          default: syntax_error(line_, col_, std::string("bad escape '\\") + e + "'");
        }
        advance();
        continue;
      }
      v += c;
      advance();
    }
    if (pos_ >= s_.size()) syntax_error(line, col, "unterminated string");
    advance();
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) { g_.set_blank_prefix("p"); }

  Graph run() {
    bool ns_set = false;
    while (peek().kind != Tok::kEnd) {
      const Token& t = peek();
      if (t.kind == Tok::kPrefix) {
        // "@prefix" requires a dot, SPARQL-style "PREFIX" does not.
        bool at_form = t.value == "@";
        next();
        Token name = expect(Tok::kPName, "prefix name");
        if (name.value.back() != ':' || std::count(name.value.begin(), name.value.end(), ':') != 1) {
          syntax_error(name.line, name.col, "bad prefix name '" + name.value + "'");
        }
        Token iri = expect(Tok::kIri, "prefix IRI");
        std::string prefix = name.value.substr(0, name.value.size() - 1);
        prefixes_[prefix] = resolve(iri.value);
        if (prefix == "ns" || (prefix.empty() && !ns_set)) {
          g_.set_ns(prefixes_[prefix]);
          ns_set = prefix == "ns";
        }
        if (at_form) expect(Tok::kDot, "'.'");
      } else if (t.kind == Tok::kBase) {
        next();
        base_ = expect(Tok::kIri, "base IRI").value;
        if (peek().kind == Tok::kDot) next();
      } else {
        triples();
        expect(Tok::kDot, "'.'");
      }
    }
    return std::move(g_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  Token expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) {
      syntax_error(t.line, t.col, "expected " + what + (t.kind == Tok::kEnd ? " at end of input" : ""));
    }
    return next();
  }

  std::string resolve(const std::string& iri) const {
    if (iri.find(':') != std::string::npos || base_.empty()) return iri;
    return base_ + iri;
  }

  Iri pname(const Token& t) const {
    std::size_t colon = t.value.find(':');
    std::string prefix = t.value.substr(0, colon);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) syntax_error(t.line, t.col, "undeclared prefix '" + prefix + ":'");
    return Iri{it->second + t.value.substr(colon + 1)};
  }

  BlankNode labelled(const std::string& label) {
    auto it = labels_.find(label);
    if (it != labels_.end()) return it->second;
    BlankNode b = g_.fresh_blank();
    labels_.emplace(label, b);
    return b;
  }

  void add(const Term& s, const Iri& p, const Term& o, const Token& at) {
    try {
      g_.add(s, p, o);
    } catch (const Error& e) {
      syntax_error(at.line, at.col, e.what());
    }
  }

  void triples() {
    const Token& t = peek();
    if (t.kind == Tok::kLBracket) {
      next();
      BlankNode b = g_.fresh_blank();
      if (peek().kind != Tok::kRBracket) predicate_object_list(b);
      expect(Tok::kRBracket, "']'");
      if (peek().kind != Tok::kDot) predicate_object_list(b);
      return;
    }
    Term s = subject();
    predicate_object_list(s);
  }

  Term subject() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kIri: return Iri{resolve(t.value)};
      case Tok::kPName: return pname(t);
      case Tok::kBlankLabel: return labelled(t.value);
      case Tok::kLParen: return collection();
      default: syntax_error(t.line, t.col, "expected subject");
    }
  }

  Iri verb() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kA: return vocab::kType;
      case Tok::kIri: return Iri{resolve(t.value)};
      case Tok::kPName: return pname(t);
      default: syntax_error(t.line, t.col, "expected predicate");
    }
  }

  void predicate_object_list(const Term& s) {
    for (;;) {
      const Token& at = peek();
      Iri p = verb();
      for (;;) {
        Term o = object();
        add(s, p, o, at);
        if (peek().kind != Tok::kComma) break;
        next();
      }
      if (peek().kind != Tok::kSemicolon) return;
      while (peek().kind == Tok::kSemicolon) next();
      Tok k = peek().kind;
      if (k == Tok::kDot || k == Tok::kRBracket) return;
    }
  }

  Term object() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kIri: return Iri{resolve(t.value)};
      case Tok::kPName: return pname(t);
      case Tok::kBlankLabel: return labelled(t.value);
      case Tok::kLParen: return collection();
      case Tok::kLBracket: {
        BlankNode b = g_.fresh_blank();
        if (peek().kind != Tok::kRBracket) predicate_object_list(b);
        expect(Tok::kRBracket, "']'");
        return b;
      }
      case Tok::kString: {
        Literal l{t.value, "", ""};
        if (peek().kind == Tok::kLangTag) {
          l.language = next().value;
        } else if (peek().kind == Tok::kCaretCaret) {
          next();
          const Token& dt = next();
          if (dt.kind == Tok::kIri) {
            l.datatype = resolve(dt.value);
          } else if (dt.kind == Tok::kPName) {
            l.datatype = pname(dt).value;
          } else {
            syntax_error(dt.line, dt.col, "expected datatype IRI");
          }
        }
        return l;
      }
      case Tok::kNumber: {
        bool decimal = t.value.find_first_of(".eE") != std::string::npos;
        return Literal{t.value, std::string(vocab::kXsd) + (decimal ? "decimal" : "integer"), ""};
      }
      case Tok::kBoolean:
        return Literal{t.value, std::string(vocab::kXsd) + "boolean", ""};
      default:
        syntax_error(t.line, t.col, "expected object");
    }
  }

  Term collection() {
    std::vector<Term> items;
    while (peek().kind != Tok::kRParen) {
      if (peek().kind == Tok::kEnd) syntax_error(peek().line, peek().col, "unterminated list");
      items.push_back(object());
    }
    next();
    return g_.add_list(items);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Graph g_;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, BlankNode> labels_;
  std::string base_;
};

}  // namespace

std::string serialize_turtle(const Graph& g) { return Writer(g).run(); }

Graph parse_turtle(std::string_view text) {
  Lexer lexer(text);
  return Parser(lexer.run()).run();
}

}  // namespace nisonto::rdf
