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

#include "nisonto/mapping.hpp"

#include <algorithm>
#include <set>

#include "nisonto/error.hpp"
#include "nisonto/hash.hpp"
#include "nisonto/tagger.hpp"
#include "nisonto/text.hpp"

namespace nisonto::mapping {

namespace {

bool has_alnum(std::string_view w) {
  return std::any_of(w.begin(), w.end(), [](char c) { return text::is_alnum(c); });
}

bool is_camel_identifier(std::string_view s) {
  if (s.empty() || !text::is_upper(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return text::is_alnum(c); });
}

// "large-scale" -> "LargeScale", "47(1)" -> "47_1".
std::string camel_word(std::string_view w) {
  std::string out;
  std::string part;
  auto flush = [&]() {
    if (part.empty()) return;
    if (!out.empty() && text::is_digit(out.back()) && text::is_digit(part.front())) out += '_';
    out += text::capitalize(part);
    part.clear();
  };
  for (char c : w) {
    if (text::is_alnum(c)) {
      part += c;
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  for (auto& t : nlp::tokenize(s)) out.push_back(std::move(t.text));
  return out;
}

std::string strip_p_marker(std::string_view s, bool* passive) {
  std::string_view t = text::trim(s);
  std::string lower = text::to_lower(t);
  for (std::string_view marker : {"passive - ", "p - "}) {
    if (lower.starts_with(marker)) {
      *passive = true;
      return std::string(text::trim(t.substr(marker.size())));
    }
  }
  if (lower == "p" || lower == "passive") {
    *passive = true;
    return {};
  }
  return std::string(t);
}

bool is_participle_form(const nlp::Lexicon& lex, const std::string& w) {
  return (w.size() > 4 && w.ends_with("ed") && !lex.is_ed_exception(w)) ||
         lex.is_irregular_participle(w);
}

}  // namespace

std::size_t DataDictionary::measure_count() const {
  std::size_t n = 0;
  for (const auto& [k, v] : groups) n += v.size();
  return n;
}

std::string group_key_string(const GroupKey& key) {
  return std::to_string(key.first) + ":" + key.second;
}

std::optional<EntityName> Mapper::single_entity(std::string_view phrase) const {
  std::vector<std::string> words = words_of(phrase);
  if (words.empty()) return std::nullopt;

  std::size_t lead = 0;
  while (lead < words.size() && lexicon_->is_determiner(text::to_lower(words[lead]))) ++lead;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const nlp::GazetteerEntry* e = nullptr;
    if (gazetteer_->match_at(words, i, &e) > 0 && e != nullptr) {
      // Modifiers in front of the name ("single point of contact") are kept.
      auto modifier = [&](const std::string& w) {
        static const std::set<std::string> kVague = {"other",    "relevant",    "such",
                                                     "same",     "respective",  "appropriate",
                                                     "concerned", "certain",    "further"};
        std::string lw = text::to_lower(w);
        if (kVague.contains(lw)) return false;
        return text::is_lower(w.front()) && std::all_of(w.begin(), w.end(), text::is_alpha) &&
               !lexicon_->is_preposition(lw) && !lexicon_->is_pronoun(lw) &&
               !lexicon_->is_conjunction(lw) && !lexicon_->is_subordinator(lw);
      };
      if (i > lead && std::all_of(words.begin() + lead, words.begin() + i, modifier)) {
        std::string canonical;
        for (std::size_t k = lead; k < i; ++k) canonical += camel_word(words[k]);
        return EntityName{canonical + e->canonical, std::nullopt};
      }
      return EntityName{e->canonical, e->acronym.empty() ? std::nullopt
                                                         : std::optional(e->acronym)};
    }
    std::string bare;
    for (char c : words[i]) {
      if (text::is_alnum(c)) bare += c;
    }
    for (std::string cand : {bare, bare.ends_with('s') ? bare.substr(0, bare.size() - 1) : ""}) {
      if (cand.empty()) continue;
      if (const auto* a = gazetteer_->find_by_acronym(cand)) {
        return EntityName{a->canonical, std::optional(a->acronym)};
      }
    }
  }

  // No gazetteer hit: the head phrase in CamelCase.
  std::size_t b = 0;
  while (b < words.size() && (lexicon_->is_determiner(text::to_lower(words[b])) ||
                              !has_alnum(words[b]))) {
    ++b;
  }
  std::vector<std::string> head;
  for (std::size_t i = b; i < words.size(); ++i) {
    std::string lw = text::to_lower(words[i]);
    if (!has_alnum(words[i]) || words[i].front() == '(') break;
    if (lw != "of" && lexicon_->is_preposition(lw)) break;
    if (lw == "that" || lw == "which" || lw == "who") break;
    if (!head.empty() && is_participle_form(*lexicon_, lw)) break;
    head.push_back(words[i]);
  }
  if (head.empty()) return std::nullopt;
  bool nominal = std::any_of(head.begin(), head.end(), [&](const std::string& w) {
    std::string lw = text::to_lower(w);
    return text::is_alpha(w.front()) && !lexicon_->is_pronoun(lw) && lw != "of";
  });
  if (!nominal) return std::nullopt;

  auto of = std::find_if(head.begin(), head.end(),
                         [](const std::string& w) { return text::iequals(w, "of"); });
  std::size_t h = (of == head.begin() || of == head.end()) ? head.size() - 1
                                                            : (of - head.begin()) - 1;
  std::string& noun = head[h];
  bool all_caps = std::none_of(noun.begin(), noun.end(), [](char c) { return text::is_lower(c); });
  if (!all_caps) {
    std::string sing = lexicon_->singularize(text::to_lower(noun));
    if (text::is_upper(noun.front())) sing = text::capitalize(sing);
    noun = sing;
  }
  std::string canonical;
  for (const auto& w : head) canonical += camel_word(w);
  if (canonical.empty() || !text::is_alpha(canonical.front())) return std::nullopt;
  return EntityName{canonical, std::nullopt};
}

EntityName Mapper::normalize_entity(std::string_view subject) const {
  std::string_view s = text::trim(subject);
  if (s.empty()) throw Error(ErrorCode::kUnknownEntity, "empty subject");

  // Already canonical ("MemberState", "CSIRT", "CompetentAuthorityAndCSIRT").
  if (is_camel_identifier(s) &&
      std::count_if(s.begin(), s.end(), [](char c) { return text::is_upper(c); }) >= 2) {
    if (const auto* e = gazetteer_->find_by_canonical(s)) {
      return EntityName{e->canonical, e->acronym.empty() ? std::nullopt : std::optional(e->acronym)};
    }
    if (const auto* e = gazetteer_->find_by_acronym(s)) {
      return EntityName{e->canonical, std::optional(e->acronym)};
    }
    const nlp::GazetteerEntry* e = nullptr;
    if (gazetteer_->match_at({std::string(s)}, 0, &e) > 0 && e != nullptr) {
      return EntityName{e->canonical, e->acronym.empty() ? std::nullopt : std::optional(e->acronym)};
    }
    return EntityName{std::string(s), std::nullopt};
  }

  // Split coordinations at the top level: "X and Y", "ESA - CA", "X, Y".
  std::vector<std::string> words = words_of(s);
  std::vector<std::string> parts{""};
  int depth = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    std::string lw = text::to_lower(w);
    if (w == "(") ++depth;
    if (w == ")" && depth > 0) --depth;
    bool split = depth == 0 && (w == "-" || w == "," || w == "/" ||
                                ((lw == "and" || lw == "or") &&
                                 !(i + 1 < words.size() && text::iequals(words[i + 1], "more"))));
    if (split) {
      parts.emplace_back();
      continue;
    }
    if (!parts.back().empty()) parts.back() += ' ';
    parts.back() += w;
  }

  std::vector<EntityName> found;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    auto e = single_entity(p);
    if (e && std::find(found.begin(), found.end(), *e) == found.end()) found.push_back(*e);
  }
  if (found.empty()) {
    throw Error(ErrorCode::kUnknownEntity, "no entity head in '" + std::string(s) + "'");
  }
  if (found.size() == 1) return found.front();
  EntityName joined;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i > 0) joined.canonical += "And";
    joined.canonical += found[i].canonical;
  }
  return joined;
}

PredicateName Mapper::name_predicate(std::string_view verb_group) const {
  PredicateName out;
  std::string rest = strip_p_marker(verb_group, &out.passive);
  std::vector<std::string> content;
  for (const auto& w : text::split_words(text::to_lower(rest))) {
    std::string clean;
    for (char c : w) {
      if (text::is_alnum(c)) clean += c;
    }
    if (clean.empty() || lexicon_->is_modal(clean) || clean == "not") continue;
    if (lexicon_->is_adverb(clean) && !lexicon_->is_particle(clean)) continue;
    content.push_back(clean);
  }
  while (content.size() > 1 && lexicon_->auxiliary_lemma(content.front())) {
    if (lexicon_->auxiliary_lemma(content.front()) == "be" &&
        is_participle_form(*lexicon_, content[1])) {
      out.passive = true;
    }
    content.erase(content.begin());
  }
  while (content.size() > 1 && lexicon_->is_particle(content.back())) content.pop_back();
  if (content.empty()) {
    throw Error(ErrorCode::kEmptyPredicate,
                "no predicate left in '" + std::string(verb_group) + "'");
  }
  out.name = lexicon_->lemmatize_verb(content.back());
  return out;
}

std::string Mapper::name_object(std::string_view object, std::size_t max_len) const {
  std::vector<std::string> words = words_of(object);
  // Atoms of the name; "-" is a separator atom.
  std::vector<std::string> atoms;
  bool pending_sep = false;
  auto push_sep = [&]() {
    if (!atoms.empty() && atoms.back() != "-") atoms.push_back("-");
    pending_sep = false;
  };
  auto push_word = [&](std::string w) {
    if (w.empty()) return;
    if (pending_sep) push_sep();
    atoms.push_back(std::move(w));
  };
  for (std::size_t i = 0; i < words.size();) {
    const std::string& w = words[i];
    std::string lw = text::to_lower(w);
    const nlp::GazetteerEntry* e = nullptr;
    std::size_t m = has_alnum(w) ? gazetteer_->match_at(words, i, &e) : 0;
    if (m >= 2 && e != nullptr && !e->acronym.empty()) {
      push_word(e->acronym);
      pending_sep = true;
      i += m;
      continue;
    }
    if (lw == "one" && i + 2 < words.size() && text::iequals(words[i + 1], "or") &&
        text::iequals(words[i + 2], "more")) {
      i += 3;
      continue;
    }
    ++i;
    if (w == "-" || lw == "and" || lw == "or") {
      push_sep();
      continue;
    }
    if (!has_alnum(w) || lexicon_->is_determiner(lw) || lw == "that") continue;
    push_word(camel_word(w));
  }
  while (!atoms.empty() && atoms.back() == "-") atoms.pop_back();
  std::string full;
  for (const auto& a : atoms) full += a;
  if (full.empty()) {
    throw Error(ErrorCode::kEmptyObjectName,
                "nothing left of object '" + std::string(object) + "'");
  }
  if (full.size() <= max_len) return full;

  std::string suffix = "-" + hash::short_hash(full, 6);
  std::size_t budget = max_len > suffix.size() ? max_len - suffix.size() : 0;
  std::string cut;
  for (const auto& a : atoms) {
    if (cut.size() + a.size() > budget) break;
    cut += a;
  }
  while (!cut.empty() && cut.back() == '-') cut.pop_back();
  if (cut.empty()) cut = full.substr(0, budget);
  return cut + suffix;
}

DataDictionary Mapper::build_dictionary(const std::vector<tab::PosRow>& rows, bool prefer_gold,
                                        std::size_t max_len) const {
  DataDictionary dict;
  for (const auto& row : rows) {
    bool from_gold = false;
    auto choose = [&](const std::string& gold, const std::string& extracted, tab::HitMark hit) {
      if (prefer_gold && hit == tab::HitMark::kWrong && !tab::normalize(gold).empty()) {
        from_gold = true;
        return gold;
      }
      return extracted;
    };
    std::string subject = choose(row.gold_subject, row.extracted_subject, row.subject_hit);
    std::string verb = choose(row.gold_verb, row.extracted_verb, row.verb_hit);
    std::string object = choose(row.gold_object, row.extracted_object, row.object_hit);
    object = tab::alternatives(object).front();

    auto review = [&](std::string slot, std::string value, std::string reason) {
      dict.review.push_back({row.article, row.row_id, std::move(slot), std::move(value),
                             std::move(reason)});
    };
    if (tab::normalize(subject).empty()) {
      review("subject", subject, "empty slot");
      continue;
    }
    if (tab::normalize(verb).empty()) {
      review("verb", verb, "empty slot");
      continue;
    }
    std::string obj_norm = tab::normalize(object);
    if (obj_norm.empty() || obj_norm == "none") {
      review("object", object, "empty slot");
      continue;
    }

    MeasureSpec m;
    m.article = row.article;
    m.source_row = row.row_id;
    m.from_gold = from_gold;
    std::string slot = "subject";
    try {
      m.entity = normalize_entity(subject);
      slot = "verb";
      PredicateName p = name_predicate(verb);
      m.predicate = p.name;
      m.passive = p.passive || row.passive;
      slot = "object";
      m.object_class = name_object(object, max_len);
    } catch (const Error& e) {
      review(slot, slot == "subject" ? subject : slot == "verb" ? verb : object, e.what());
      continue;
    }
    dict.groups[{m.article, m.entity.canonical}].push_back(std::move(m));
  }
  return dict;
}

}  // namespace nisonto::mapping
