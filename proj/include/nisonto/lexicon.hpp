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

#ifndef NISONTO_LEXICON_HPP_
#define NISONTO_LEXICON_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nisonto::nlp {

// Closed-class word lists plus the small open-class tables the tagger and
// lemmatizer need. Immutable after construction.
class Lexicon {
 public:
  static Lexicon from_json(std::string_view json);
  static Lexicon from_file(const std::string& path);
  // The lexicon compiled into the binary from data/lexicon.json.
  static const Lexicon& builtin();

  const std::string& version() const { return version_; }

  bool is_modal(std::string_view w) const { return modals_.contains(std::string(w)); }
  bool is_determiner(std::string_view w) const { return determiners_.contains(std::string(w)); }
  bool is_preposition(std::string_view w) const { return prepositions_.contains(std::string(w)); }
  bool is_conjunction(std::string_view w) const { return conjunctions_.contains(std::string(w)); }
  bool is_subordinator(std::string_view w) const { return subordinators_.contains(std::string(w)); }
  bool is_pronoun(std::string_view w) const { return pronouns_.contains(std::string(w)); }
  bool is_adverb(std::string_view w) const { return adverbs_.contains(std::string(w)); }
  bool is_adjective(std::string_view w) const { return adjectives_.contains(std::string(w)); }
  bool is_particle(std::string_view w) const { return particles_.contains(std::string(w)); }
  bool is_verb(std::string_view lemma) const { return verbs_.contains(std::string(lemma)); }
  bool is_irregular_participle(std::string_view w) const {
    return irregular_participles_.contains(std::string(w));
  }
  bool is_ed_exception(std::string_view w) const { return ed_exceptions_.contains(std::string(w)); }
  bool is_ly_exception(std::string_view w) const { return ly_exceptions_.contains(std::string(w)); }

  // Lemma of an auxiliary form ("has" -> "have"), if `w` is one.
  std::optional<std::string> auxiliary_lemma(std::string_view w) const;

  // Multi-word prepositions, each as a lower-cased word list.
  const std::vector<std::vector<std::string>>& complex_prepositions() const {
    return complex_prepositions_;
  }

  // Inflection handling; input is expected lower-case.
  std::string lemmatize_verb(std::string_view word) const;
  std::string singularize(std::string_view noun) const;

 private:
  std::string version_;
  std::set<std::string> modals_, determiners_, prepositions_, conjunctions_,
      subordinators_, pronouns_, adverbs_, adjectives_, particles_, verbs_,
      irregular_participles_, ed_exceptions_, ly_exceptions_;
  std::map<std::string, std::string> auxiliaries_, irregular_verbs_, irregular_nouns_;
  std::vector<std::vector<std::string>> complex_prepositions_;
};

struct GazetteerEntry {
  std::string name;       // surface form, e.g. "Member State"
  std::string acronym;    // e.g. "MS"
  std::string canonical;  // singular CamelCase class name, e.g. "MemberState"
  std::vector<std::string> key;  // lower-cased singular words used for matching
};

// Domain entity inventory (names and acronyms) used by the tagger to mark
// proper nouns and by the pattern mapper to canonicalize entities.
class Gazetteer {
 public:
  static Gazetteer from_json(std::string_view json, const Lexicon& lexicon);
  static Gazetteer from_file(const std::string& path, const Lexicon& lexicon);
  static const Gazetteer& builtin();

  const std::string& version() const { return version_; }
  const std::vector<GazetteerEntry>& entries() const { return entries_; }

  // Longest entry matching `words` starting at `pos`; returns the number of
  // words consumed (0 when nothing matches). Matching is case-insensitive
  // and number-insensitive ("Member States" matches "Member State").
  std::size_t match_at(const std::vector<std::string>& words, std::size_t pos,
                       const GazetteerEntry** entry = nullptr) const;

  const GazetteerEntry* find_by_acronym(std::string_view acronym) const;
  const GazetteerEntry* find_by_canonical(std::string_view canonical) const;

 private:
  std::string version_;
  std::vector<GazetteerEntry> entries_;
  const Lexicon* lexicon_ = nullptr;
};

}  // namespace nisonto::nlp

#endif  // NISONTO_LEXICON_HPP_
