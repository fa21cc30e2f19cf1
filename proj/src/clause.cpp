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

#include "nisonto/clause.hpp"

#include <array>
#include <utility>

#include "nisonto/error.hpp"

namespace nisonto::clause {

namespace {

using nlp::PosTag;
using nlp::Token;
using nlp::VerbGroup;

constexpr std::array<std::string_view, 6> kPatternNames = {"SV", "SVC", "SVO",
                                                           "SVA", "SVOA", "SVOC"};

struct Ctx {
  std::string_view sentence;
  const std::vector<Token>& tokens;
  const std::vector<VerbGroup>& groups;
  const nlp::Lexicon& lex;
  const SentenceRef& ref;
  std::vector<std::string> lower;
};

bool is_nominal(PosTag t) {
  return t == PosTag::kNoun || t == PosTag::kProperNoun || t == PosTag::kPronoun ||
         t == PosTag::kNumber || t == PosTag::kOther;
}

bool starts_np(PosTag t) {
  return is_nominal(t) || t == PosTag::kDeterminer || t == PosTag::kAdjective;
}

bool is_coordinator(const Ctx& c, std::size_t k) {
  return c.lower[k] == "and" || c.lower[k] == "or";
}

bool is_relative(std::string_view w) {
  return w == "which" || w == "who" || w == "whom" || w == "whose";
}

// Tokens [b, e) as a sentence substring; trailing commas and coordinators and
// leading commas are dropped. Empty optional when nothing is left.
std::optional<Phrase> make_phrase(const Ctx& c, std::size_t b, std::size_t e) {
  while (b < e && c.tokens[b].text == ",") ++b;
  while (e > b && (c.tokens[e - 1].text == "," || c.tokens[e - 1].text == ";" ||
                   is_coordinator(c, e - 1))) {
    --e;
  }
  if (b >= e) return std::nullopt;
  Phrase p;
  p.span = {c.tokens[b].span.begin, c.tokens[e - 1].span.end};
  p.text = std::string(c.sentence.substr(p.span.begin, p.span.size()));
  return p;
}

Phrase verb_phrase(const Ctx& c, const VerbGroup& g) {
  Phrase p;
  p.span = {c.tokens[g.begin].span.begin, c.tokens[g.end - 1].span.end};
  if (g.insert_begin == g.insert_end) {
    p.text = std::string(c.sentence.substr(p.span.begin, p.span.size()));
  } else {
    auto left = make_phrase(c, g.begin, g.insert_begin);
    auto right = make_phrase(c, g.insert_end, g.end);
    p.text = left->text + " " + right->text;
  }
  return p;
}

// Inside a "Where ..."/"If ..." clause that has not been closed by a comma.
bool is_subordinate(const Ctx& c, const VerbGroup& g, std::size_t lo) {
  for (std::size_t m = g.begin; m > lo;) {
    --m;
    if (c.tokens[m].text == ",") return false;
    if (c.tokens[m].tag == PosTag::kConjunction && c.lower[m] != "that" &&
        c.lex.is_subordinator(c.lower[m])) {
      return true;
    }
  }
  return false;
}

std::optional<std::size_t> choose_main(const Ctx& c, std::size_t lo, std::size_t hi) {
  auto in_region = [&](const VerbGroup& g) { return g.begin >= lo && g.end <= hi; };
  for (bool strict : {true, false}) {
    for (std::size_t i = 0; i < c.groups.size(); ++i) {
      const VerbGroup& g = c.groups[i];
      if (in_region(g) && g.modal && !(strict && is_subordinate(c, g, lo))) return i;
    }
    for (std::size_t i = 0; i < c.groups.size(); ++i) {
      const VerbGroup& g = c.groups[i];
      if (in_region(g) && g.is_finite(c.tokens) && !(strict && is_subordinate(c, g, lo))) {
        return i;
      }
    }
  }
  for (std::size_t i = 0; i < c.groups.size(); ++i) {
    const VerbGroup& g = c.groups[i];
    if (in_region(g) && !g.is_infinitive) return i;
  }
  return std::nullopt;
}

std::optional<Phrase> find_subject(const Ctx& c, std::size_t lo, std::size_t verb_begin) {
  auto allowed = [&](std::size_t k) {
    const Token& t = c.tokens[k];
    switch (t.tag) {
      case PosTag::kDeterminer:
      case PosTag::kAdjective:
      case PosTag::kNoun:
      case PosTag::kProperNoun:
      case PosTag::kNumber:
      case PosTag::kOther:
      case PosTag::kPreposition:
      case PosTag::kPastParticiple:
      case PosTag::kAdverb:
        return true;
      case PosTag::kPronoun:
        return !is_relative(c.lower[k]);
      case PosTag::kConjunction:
        return is_coordinator(c, k);
      case PosTag::kPunctuation:
        return t.text == "(" || t.text == ")";
      default:
        return false;
    }
  };
  std::size_t b = verb_begin;
  while (b > lo && allowed(b - 1)) --b;
  std::size_t e = verb_begin;

  bool dropped_preposition = false;
  while (b < e && !starts_np(c.tokens[b].tag)) {
    dropped_preposition |= c.tokens[b].tag == PosTag::kPreposition;
    ++b;
  }
  if (dropped_preposition) {
    // "In 2024 the Commission shall": the subject starts at the determiner.
    for (std::size_t k = b; k < e; ++k) {
      if (c.tokens[k].tag == PosTag::kDeterminer) {
        b = k;
        break;
      }
    }
  }
  while (e > b) {
    PosTag t = c.tokens[e - 1].tag;
    if (t == PosTag::kAdverb || t == PosTag::kConjunction || t == PosTag::kPreposition ||
        c.tokens[e - 1].text == "(") {
      --e;
    } else {
      break;
    }
  }
  bool has_head = false;
  for (std::size_t k = b; k < e; ++k) has_head |= is_nominal(c.tokens[k].tag);
  if (!has_head) return std::nullopt;
  return make_phrase(c, b, e);
}

const VerbGroup* group_starting_at(const Ctx& c, std::size_t k) {
  for (const VerbGroup& g : c.groups) {
    if (g.begin == k) return &g;
  }
  return nullptr;
}

const VerbGroup* first_group_after(const Ctx& c, std::size_t k) {
  for (const VerbGroup& g : c.groups) {
    if (g.begin > k) return &g;
  }
  return nullptr;
}

// Index where a coordinated clause begins (the separator), or `hi`.
std::size_t find_boundary(const Ctx& c, std::size_t lo, std::size_t hi) {
  int depth = 0;
  for (std::size_t m = lo; m < hi; ++m) {
    const std::string& t = c.tokens[m].text;
    if (t == "(") ++depth;
    if (t == ")" && depth > 0) --depth;
    if (depth > 0) continue;
    if (t == ";") return m;
    if (is_coordinator(c, m)) {
      const VerbGroup* g = first_group_after(c, m);
      if (g && g->end <= hi && g->begin <= m + 6 && g->is_finite(c.tokens) &&
          !g->is_infinitive) {
        return m;
      }
    }
    if (t == ",") {
      const VerbGroup* g = group_starting_at(c, m + 1);
      if (g && g->modal && g->end <= hi) return m;
    }
  }
  return hi;
}

bool is_complex_preposition_at(const Ctx& c, std::size_t k, std::size_t e, std::size_t* len) {
  for (const auto& words : c.lex.complex_prepositions()) {
    if (k + words.size() > e) continue;
    bool ok = true;
    for (std::size_t j = 0; j < words.size() && ok; ++j) ok = c.lower[k + j] == words[j];
    if (ok) {
      *len = words.size();
      return true;
    }
  }
  return false;
}

// Splits [b, e) into prepositional phrases. A new phrase starts at a
// preposition other than "of" that follows a nominal, or after a comma that
// is followed by a preposition.
std::vector<Phrase> split_adverbials(const Ctx& c, std::size_t b, std::size_t e) {
  std::vector<Phrase> out;
  std::size_t start = b;
  auto close = [&](std::size_t end) {
    if (auto p = make_phrase(c, start, end)) out.push_back(std::move(*p));
  };
  for (std::size_t m = b; m < e; ++m) {
    std::size_t len = 0;
    bool complex = is_complex_preposition_at(c, m, e, &len);
    if (c.tokens[m].text == ",") {
      if (m + 1 < e && c.tokens[m + 1].tag == PosTag::kPreposition) {
        close(m);
        start = m + 1;
      }
      continue;
    }
    bool prep = complex || c.tokens[m].tag == PosTag::kPreposition;
    if (m > start && prep && c.lower[m] != "of" && is_nominal(c.tokens[m - 1].tag) &&
        !(m + 1 < e && c.tokens[m + 1].tag == PosTag::kVerb)) {
      close(m);
      start = m;
    }
    if (complex) m += len - 1;
  }
  close(e);
  return out;
}

bool is_infinitive_start(const Ctx& c, std::size_t k, std::size_t hi) {
  return c.lower[k] == "to" && k + 1 < hi && c.tokens[k + 1].tag == PosTag::kVerb;
}

void fill_slots(const Ctx& c, const VerbGroup& vg, std::size_t k, std::size_t hi, Clause& out) {
  while (k < hi && c.tokens[k].tag == PosTag::kAdverb) ++k;
  if (k >= hi) return;
  const Token& first = c.tokens[k];
  bool copular = out.verb_lemma == "be" && !out.passive;

  if (out.passive) {
    out.adverbials = split_adverbials(c, k, hi);
    return;
  }
  if (first.tag == PosTag::kPreposition && !is_infinitive_start(c, k, hi)) {
    out.adverbials = split_adverbials(c, k, hi);
    out.obligatory_adverbial = copular && !out.adverbials.empty();
    return;
  }
  if (starts_np(first.tag)) {
    std::size_t comma = k;
    int depth = 0;
    for (; comma < hi; ++comma) {
      const std::string& t = c.tokens[comma].text;
      if (t == "(") ++depth;
      if (t == ")" && depth > 0) --depth;
      if (t == "," && depth == 0) break;
    }
    auto np = make_phrase(c, k, comma);
    if (copular) {
      out.complement = np;
    } else {
      out.object = np;
    }
    // Later comma-delimited prepositional segments become adverbials; other
    // segments (appositions, reduced relatives) are not kept.
    std::size_t seg = comma;
    while (seg < hi) {
      std::size_t next = seg + 1;
      while (next < hi && c.tokens[next].text != ",") ++next;
      if (seg + 1 < next && c.tokens[seg + 1].tag == PosTag::kPreposition &&
          !is_infinitive_start(c, seg + 1, next)) {
        for (auto& p : split_adverbials(c, seg + 1, next)) out.adverbials.push_back(std::move(p));
      }
      seg = next;
    }
    return;
  }
  out.object = fallback_object(c.sentence, c.tokens, vg);
  out.is_fallback_object = true;
}

std::vector<Clause> extract_region(const Ctx& c, std::size_t lo, std::size_t hi,
                                   const std::optional<Phrase>& inherited) {
  auto main = choose_main(c, lo, hi);
  if (!main) return {};
  const VerbGroup& vg = c.groups[*main];

  Clause out;
  out.source = c.ref;
  out.subject = find_subject(c, lo, vg.begin);
  if (!out.subject && inherited) {
    out.subject = inherited;
    out.subject_inherited = true;
  }
  out.verb = verb_phrase(c, vg);
  out.verb_head = c.tokens[vg.head].text;
  out.verb_lemma = c.tokens[vg.head].lemma;
  out.passive = vg.is_passive;

  std::size_t k = vg.end;
  // "designate or establish X": the second verb shares the object.
  if (k < hi && is_coordinator(c, k)) {
    std::size_t v = k + 1;
    while (v < hi && c.tokens[v].tag == PosTag::kAdverb) ++v;
    const VerbGroup* conj = group_starting_at(c, v);
    bool same_voice = conj && (conj->is_passive == vg.is_passive ||
                               (vg.is_passive && c.tokens[conj->head].tag == PosTag::kPastParticiple));
    if (conj && !conj->modal && conj->end <= hi && same_voice) {
      k = conj->end;
    }
  }

  if (k < hi && c.tokens[k].tag == PosTag::kConjunction &&
      (c.lower[k] == "that" || c.lower[k] == "whether")) {
    out.complement = make_phrase(c, k, hi);
    out.nested = extract_region(c, k + 1, hi, std::nullopt);
    out.object = fallback_object(c.sentence, c.tokens, vg);
    out.is_fallback_object = true;
    out.pattern = pattern_for(out);
    return {out};
  }

  std::size_t boundary = find_boundary(c, k, hi);
  fill_slots(c, vg, k, boundary, out);
  out.pattern = pattern_for(out);

  std::vector<Clause> result{out};
  if (boundary < hi) {
    auto sib = extract_region(c, boundary + 1, hi, out.subject);
    for (auto& s : sib) result.push_back(std::move(s));
  }
  return result;
}

}  // namespace

std::string_view pattern_name(ClausePattern p) {
  return kPatternNames[static_cast<std::size_t>(p)];
}

ClausePattern parse_pattern(std::string_view name) {
  for (std::size_t i = 0; i < kPatternNames.size(); ++i) {
    if (kPatternNames[i] == name) return static_cast<ClausePattern>(i);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown clause pattern '" + std::string(name) + "'");
}

ClausePattern pattern_for(const Clause& c) {
  bool o = c.object.has_value();
  bool comp = c.complement.has_value();
  bool a = c.obligatory_adverbial && !c.adverbials.empty();
  if (o && comp) return ClausePattern::kSVOC;
  if (o && a) return ClausePattern::kSVOA;
  if (o) return ClausePattern::kSVO;
  if (comp) return ClausePattern::kSVC;
  if (a) return ClausePattern::kSVA;
  return ClausePattern::kSV;
}

Phrase fallback_object(std::string_view sentence, const std::vector<nlp::Token>& tokens,
                       const nlp::VerbGroup& vg) {
  std::size_t b = tokens[vg.end - 1].span.end;
  while (b < sentence.size() && text::is_space(sentence[b])) ++b;
  std::size_t e = sentence.size();
  while (e > b && text::is_space(sentence[e - 1])) --e;
  if (e > b && sentence[e - 1] == '.') --e;
  while (e > b && text::is_space(sentence[e - 1])) --e;
  if (e <= b) {
    throw Error(ErrorCode::kEmptyTail,
                "verb group '" + tokens[vg.head].text + "' ends the sentence");
  }
  return Phrase{std::string(sentence.substr(b, e - b)), {b, e}};
}

std::vector<Clause> Extractor::extract(std::string_view sentence, const SentenceRef& ref) const {
  std::vector<Token> tokens = tagger_->tag(nlp::tokenize(sentence));
  std::vector<VerbGroup> groups;
  try {
    groups = nlp::find_verb_groups(tokens, tagger_->lexicon());
  } catch (const Error& e) {
    throw Error(ErrorCode::kUnextractable, "no verb group in '" + std::string(sentence) + "'");
  }
  Ctx c{sentence, tokens, groups, tagger_->lexicon(), ref, {}};
  c.lower.reserve(tokens.size());
  for (const Token& t : tokens) c.lower.push_back(text::to_lower(t.text));

  std::size_t hi = tokens.size();
  if (hi > 0) {
    const std::string& last = tokens[hi - 1].text;
    if (last == "." || last == "?" || last == "!") --hi;
  }
  auto clauses = extract_region(c, 0, hi, std::nullopt);
  if (clauses.empty()) {
    throw Error(ErrorCode::kUnextractable, "no main verb in '" + std::string(sentence) + "'");
  }
  return clauses;
}

std::vector<SentenceExtraction> Extractor::extract_document(
    const ingest::DirectiveDocument& doc) const {
  std::vector<SentenceExtraction> out;
  for (const auto& article : doc.articles) {
    for (const auto& item : article.items) {
      for (const auto& s : item.sentences) {
        SentenceExtraction rec;
        rec.source = {article.number, item.label, s.index_in_item, item.row_id(s)};
        rec.sentence = s.text;
        try {
          rec.clauses = extract(s.text, rec.source);
        } catch (const Error& e) {
          rec.error = e.what();
        }
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

}  // namespace nisonto::clause
