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

#include "nisonto/lexicon.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nisonto/error.hpp"
#include "nisonto/text.hpp"

namespace nisonto::nlp {

extern const std::string_view kDefaultLexiconJson;
extern const std::string_view kDefaultGazetteerJson;

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + ": " + e.what());
  }
}

void load_set(const json& j, const char* key, std::set<std::string>& out) {
  if (!j.contains(key)) return;
  for (const auto& w : j.at(key)) out.insert(text::to_lower(w.get<std::string>()));
}

void load_map(const json& j, const char* key, std::map<std::string, std::string>& out) {
  if (!j.contains(key)) return;
  for (const auto& [k, v] : j.at(key).items()) out[text::to_lower(k)] = v.get<std::string>();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

Lexicon Lexicon::from_json(std::string_view text) {
  json j = parse_json(text, "lexicon");
  Lexicon lex;
  lex.version_ = j.value("version", "unversioned");
  load_set(j, "modals", lex.modals_);
  load_set(j, "determiners", lex.determiners_);
  load_set(j, "prepositions", lex.prepositions_);
  load_set(j, "conjunctions", lex.conjunctions_);
  load_set(j, "subordinators", lex.subordinators_);
  load_set(j, "pronouns", lex.pronouns_);
  load_set(j, "adverbs", lex.adverbs_);
  load_set(j, "adjectives", lex.adjectives_);
  load_set(j, "particles", lex.particles_);
  load_set(j, "verbs", lex.verbs_);
  load_set(j, "irregular_participles", lex.irregular_participles_);
  load_set(j, "ed_exceptions", lex.ed_exceptions_);
  load_set(j, "ly_exceptions", lex.ly_exceptions_);
  load_map(j, "auxiliaries", lex.auxiliaries_);
  load_map(j, "irregular_verbs", lex.irregular_verbs_);
  load_map(j, "irregular_nouns", lex.irregular_nouns_);
  if (j.contains("complex_prepositions")) {
    for (const auto& p : j.at("complex_prepositions")) {
      lex.complex_prepositions_.push_back(
          text::split_words(text::to_lower(p.get<std::string>())));
    }
  }
  return lex;
}

Lexicon Lexicon::from_file(const std::string& path) { return from_json(read_file(path)); }

const Lexicon& Lexicon::builtin() {
  static const Lexicon lexicon = from_json(kDefaultLexiconJson);
  return lexicon;
}

std::optional<std::string> Lexicon::auxiliary_lemma(std::string_view w) const {
  auto it = auxiliaries_.find(std::string(w));
  if (it == auxiliaries_.end()) return std::nullopt;
  return it->second;
}

std::string Lexicon::lemmatize_verb(std::string_view word) const {
  std::string w(word);
  if (auto aux = auxiliary_lemma(w)) return *aux;
  if (auto it = irregular_verbs_.find(w); it != irregular_verbs_.end()) return it->second;
  if (is_verb(w)) return w;

  std::vector<std::string> candidates;
  auto doubled = [](const std::string& s) {
    return s.size() >= 2 && s.back() == s[s.size() - 2] && !is_vowel(s.back()) &&
           s.back() != 'l' && s.back() != 's';
  };
  if (ends_with(w, "ies") || ends_with(w, "ied")) {
    candidates.push_back(w.substr(0, w.size() - 3) + "y");
  }
  if (ends_with(w, "es")) candidates.push_back(w.substr(0, w.size() - 2));
  if (ends_with(w, "s") && !ends_with(w, "ss")) candidates.push_back(w.substr(0, w.size() - 1));
  if (ends_with(w, "ed") && w.size() > 4) {
    std::string stem = w.substr(0, w.size() - 2);
    candidates.push_back(stem);
    candidates.push_back(stem + "e");
    if (doubled(stem)) candidates.push_back(stem.substr(0, stem.size() - 1));
  }
  if (ends_with(w, "ing") && w.size() > 5) {
    std::string stem = w.substr(0, w.size() - 3);
    candidates.push_back(stem);
    candidates.push_back(stem + "e");
    if (doubled(stem)) candidates.push_back(stem.substr(0, stem.size() - 1));
  }
  for (const std::string& c : candidates) {
    if (is_verb(c)) return c;
  }

  // Unknown verb: fall back on spelling rules.
  if ((ends_with(w, "ed") && w.size() > 4) || (ends_with(w, "ing") && w.size() > 5)) {
    std::string stem = w.substr(0, w.size() - (ends_with(w, "ed") ? 2 : 3));
    if (doubled(stem)) return stem.substr(0, stem.size() - 1);
    for (std::string_view e : {"at", "iz", "is", "us", "ur", "os", "v", "c", "g", "as"}) {
      if (ends_with(stem, e)) return stem + "e";
    }
    return stem;
  }
  if (ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 3) return w.substr(0, w.size() - 1);
  return w;
}

std::string Lexicon::singularize(std::string_view noun) const {
  std::string w(noun);
  if (auto it = irregular_nouns_.find(text::to_lower(w)); it != irregular_nouns_.end()) {
    // Keep the caller's capitalization for the shared prefix.
    std::string out = it->second;
    for (std::size_t i = 0; i < out.size() && i < w.size(); ++i) {
      if (text::to_lower(std::string(1, w[i]))[0] == out[i]) out[i] = w[i];
    }
    return out;
  }
  if (w.size() <= 3) return w;
  std::string lower = text::to_lower(w);
  if (ends_with(lower, "ies")) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view s : {"sses", "xes", "ches", "shes", "zes"}) {
    if (ends_with(lower, s)) return w.substr(0, w.size() - 2);
  }
  if (ends_with(lower, "ss") || ends_with(lower, "us") || ends_with(lower, "is")) return w;
  if (ends_with(lower, "s")) return w.substr(0, w.size() - 1);
  return w;
}

namespace {

std::vector<std::string> gazetteer_key(std::string_view name, const Lexicon& lex) {
  std::vector<std::string> key;
  for (const std::string& word : text::split_words(name)) {
    std::string lower = text::to_lower(word);
    if (key.empty() && lex.is_determiner(lower)) continue;
    key.push_back(text::to_lower(lex.singularize(lower)));
  }
  return key;
}

std::string camel_case_name(std::string_view name, const Lexicon& lex) {
  std::string out;
  std::vector<std::string> words = text::split_words(name);
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string lower = text::to_lower(words[i]);
    if (out.empty() && lex.is_determiner(lower)) continue;
    std::string w = i + 1 == words.size() ? lex.singularize(words[i]) : words[i];
    for (char c : text::capitalize(w)) {
      if (text::is_alnum(c)) out.push_back(c);
    }
  }
  return out;
}

std::string strip_possessive(std::string_view w) {
  std::string s(w);
  if (s.size() > 2 && (s.ends_with("'s"))) s.resize(s.size() - 2);
  if (s.size() > 1 && s.back() == '\'') s.pop_back();
  return s;
}

}  // namespace

Gazetteer Gazetteer::from_json(std::string_view text, const Lexicon& lexicon) {
  json j = parse_json(text, "gazetteer");
  Gazetteer g;
  g.lexicon_ = &lexicon;
  g.version_ = j.value("version", "unversioned");
  for (const auto& e : j.at("entries")) {
    GazetteerEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.acronym = e.value("acronym", "");
    entry.canonical = e.value("canonical", camel_case_name(entry.name, lexicon));
    entry.key = gazetteer_key(entry.name, lexicon);
    if (entry.key.empty()) continue;
    g.entries_.push_back(std::move(entry));
  }
  return g;
}

Gazetteer Gazetteer::from_file(const std::string& path, const Lexicon& lexicon) {
  return from_json(read_file(path), lexicon);
}

const Gazetteer& Gazetteer::builtin() {
  static const Gazetteer gazetteer = from_json(kDefaultGazetteerJson, Lexicon::builtin());
  return gazetteer;
}

std::size_t Gazetteer::match_at(const std::vector<std::string>& words, std::size_t pos,
                                const GazetteerEntry** entry) const {
  std::size_t best = 0;
  const GazetteerEntry* best_entry = nullptr;
  for (const GazetteerEntry& e : entries_) {
    if (e.key.size() <= best || pos + e.key.size() > words.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < e.key.size() && ok; ++k) {
      std::string w = text::to_lower(strip_possessive(words[pos + k]));
      ok = w == e.key[k] || text::to_lower(lexicon_->singularize(w)) == e.key[k];
    }
    if (ok) {
      best = e.key.size();
      best_entry = &e;
    }
  }
  if (entry != nullptr) *entry = best_entry;
  return best;
}

const GazetteerEntry* Gazetteer::find_by_acronym(std::string_view acronym) const {
  for (const GazetteerEntry& e : entries_) {
    if (!e.acronym.empty() && e.acronym == acronym) return &e;
  }
  return nullptr;
}

const GazetteerEntry* Gazetteer::find_by_canonical(std::string_view canonical) const {
  for (const GazetteerEntry& e : entries_) {
    if (e.canonical == canonical) return &e;
  }
  return nullptr;
}

}  // namespace nisonto::nlp
