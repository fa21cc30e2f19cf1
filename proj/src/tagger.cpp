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

#include "nisonto/tagger.hpp"

#include <string>
#include <vector>

#include "nisonto/error.hpp"

namespace nisonto::nlp {

std::string_view tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "Noun";
    case PosTag::kProperNoun: return "ProperNoun";
    case PosTag::kVerb: return "Verb";
    case PosTag::kModalVerb: return "ModalVerb";
    case PosTag::kPastParticiple: return "PastParticiple";
    case PosTag::kAdjective: return "Adjective";
    case PosTag::kAdverb: return "Adverb";
    case PosTag::kDeterminer: return "Determiner";
    case PosTag::kPreposition: return "Preposition";
    case PosTag::kConjunction: return "Conjunction";
    case PosTag::kPronoun: return "Pronoun";
    case PosTag::kNumber: return "Number";
    case PosTag::kPunctuation: return "Punctuation";
    case PosTag::kOther: return "Other";
  }
  return "Other";
}

namespace {

bool is_word_char(char c) {
  return text::is_alnum(c) || c == '-' || c == '/' || c == '\'' || c == '&';
}

// End of a parenthesised group starting at `i` that contains no whitespace,
// or npos.
std::size_t glued_group_end(std::string_view s, std::size_t i) {
  if (i >= s.size() || s[i] != '(') return std::string_view::npos;
  for (std::size_t k = i + 1; k < s.size() && k < i + 24; ++k) {
    if (text::is_space(s[k]) || s[k] == '(') return std::string_view::npos;
    if (s[k] == ')') return k > i + 1 ? k + 1 : std::string_view::npos;
  }
  return std::string_view::npos;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_nominal(PosTag t) {
  return t == PosTag::kNoun || t == PosTag::kProperNoun || t == PosTag::kPronoun;
}

bool is_verbal(PosTag t) { return t == PosTag::kVerb || t == PosTag::kPastParticiple; }

}  // namespace

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (text::is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text::is_alnum(s[i])) {
      while (j < s.size()) {
        if (is_word_char(s[j])) {
          ++j;
        } else if (s[j] == '.' && j + 1 < s.size() && text::is_alnum(s[j + 1]) &&
                   text::is_alnum(s[j - 1])) {
          ++j;
        } else if (std::size_t g = glued_group_end(s, j); g != std::string_view::npos) {
          j = g;
        } else {
          break;
        }
      }
      // A trailing hyphen or slash is punctuation, not part of the word.
      while (j > i + 1 && (s[j - 1] == '-' || s[j - 1] == '/')) --j;
    } else if (std::size_t g = glued_group_end(s, i); g != std::string_view::npos) {
      j = g;
    } else {
      j = i + 1;
    }
    Token t;
    t.text = std::string(s.substr(i, j - i));
    t.lemma = text::to_lower(t.text);
    t.span = {i, j};
    tokens.push_back(std::move(t));
    i = j;
  }
  return tokens;
}

std::string detokenize(std::string_view sentence, const std::vector<Token>& tokens) {
  std::string out;
  std::size_t prev_end = 0;
  for (const Token& t : tokens) {
    out.append(sentence.substr(prev_end, t.span.begin - prev_end));
    out.append(t.text);
    prev_end = t.span.end;
  }
  out.append(sentence.substr(prev_end));
  return out;
}

bool VerbGroup::is_finite(const std::vector<Token>& tokens) const {
  if (modal || is_passive) return true;
  if (is_infinitive) return false;
  const Token& h = tokens[head];
  if (h.tag != PosTag::kVerb) return false;
  // A bare gerund does not anchor a clause.
  return !(ends_with(h.text, "ing") && begin == head);
}

std::vector<Token> Tagger::tag(std::vector<Token> tokens) const {
  std::vector<std::string> lower;
  std::vector<std::string> words;
  lower.reserve(tokens.size());
  for (const Token& t : tokens) {
    lower.push_back(text::to_lower(t.text));
    words.push_back(t.text);
  }

  std::vector<bool> fixed(tokens.size(), false);
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t m = text::is_alpha(tokens[i].text[0]) ? gazetteer_->match_at(words, i) : 0;
    if (m == 0) {
      ++i;
      continue;
    }
    for (std::size_t k = i; k < i + m; ++k) {
      tokens[k].tag = lexicon_->is_preposition(lower[k]) ? PosTag::kPreposition
                                                         : PosTag::kProperNoun;
      fixed[k] = true;
    }
    i += m;
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!fixed[i]) tokens[i].tag = classify(tokens, i, lower);
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    switch (t.tag) {
      case PosTag::kNoun:
      case PosTag::kProperNoun:
        t.lemma = text::to_lower(lexicon_->singularize(lower[i]));
        break;
      case PosTag::kVerb:
      case PosTag::kPastParticiple:
        t.lemma = lexicon_->lemmatize_verb(lower[i]);
        break;
      default:
        t.lemma = lower[i];
        break;
    }
    if (t.lemma.empty()) t.lemma = t.text;
  }
  return tokens;
}

PosTag Tagger::classify(const std::vector<Token>& tokens, std::size_t i,
                        const std::vector<std::string>& lower) const {
  const Lexicon& lex = *lexicon_;
  const std::string& t = tokens[i].text;
  const std::string& w = lower[i];

  // Index of the previous token skipping adverbs, or npos.
  auto prev_skip_adverbs = [&](std::size_t k) -> std::size_t {
    while (k > 0) {
      --k;
      if (tokens[k].tag != PosTag::kAdverb) return k;
    }
    return std::string::npos;
  };
  // Previous token skipping adverbs and one comma-delimited insert
  // ("shall, where appropriate, adopt"), or npos.
  auto prev_skip_insert = [&](std::size_t k) -> std::size_t {
    std::size_t p = prev_skip_adverbs(k);
    if (p == std::string::npos || lower[p] != ",") return p;
    for (std::size_t q = p; q > 0 && p - q < 12;) {
      --q;
      if (lower[q] == ",") {
        std::size_t r = prev_skip_adverbs(q);
        if (r != std::string::npos &&
            (tokens[r].tag == PosTag::kModalVerb || lower[r] == "and" || lower[r] == "or")) {
          return r;
        }
        return p;
      }
    }
    return p;
  };
  auto after_modal = [&]() {
    std::size_t p = prev_skip_insert(i);
    return p != std::string::npos && tokens[p].tag == PosTag::kModalVerb;
  };
  auto next_is_determiner = [&]() {
    return i + 1 < tokens.size() &&
           (lex.is_determiner(lower[i + 1]) || lex.is_pronoun(lower[i + 1]));
  };
  std::size_t prev = i > 0 ? i - 1 : std::string::npos;
  PosTag prev_tag = prev != std::string::npos ? tokens[prev].tag : PosTag::kPunctuation;

  if (!text::is_alnum(t[0])) {
    if (t[0] == '(' && t.size() > 1) return PosTag::kOther;
    return PosTag::kPunctuation;
  }
  if (text::is_digit(t[0])) return PosTag::kNumber;
  if (lex.is_modal(w)) return PosTag::kModalVerb;
  if (w == "that") {
    if (prev != std::string::npos && is_verbal(prev_tag)) return PosTag::kConjunction;
    if (next_is_determiner()) return PosTag::kConjunction;
    if (i + 1 < tokens.size() && text::is_alpha(tokens[i + 1].text[0]) &&
        !lex.is_modal(lower[i + 1]) && !lex.auxiliary_lemma(lower[i + 1])) {
      return PosTag::kDeterminer;
    }
    return PosTag::kPronoun;
  }
  if (w == "to") return PosTag::kPreposition;
  if (lex.auxiliary_lemma(w)) return PosTag::kVerb;
  if (lex.is_determiner(w)) return PosTag::kDeterminer;
  if (lex.is_subordinator(w) || lex.is_conjunction(w)) return PosTag::kConjunction;
  if (lex.is_particle(w) && prev != std::string::npos && is_verbal(prev_tag)) {
    return PosTag::kAdverb;
  }
  if (lex.is_preposition(w)) return PosTag::kPreposition;
  if (lex.is_pronoun(w)) return PosTag::kPronoun;
  if (lex.is_adverb(w)) return PosTag::kAdverb;

  // Open class from here on.
  if (after_modal()) return PosTag::kVerb;

  std::string lemma = lex.lemmatize_verb(w);
  bool participle_form =
      (ends_with(w, "ed") && w.size() > 4 && !lex.is_ed_exception(w)) ||
      lex.is_irregular_participle(w);
  std::size_t p = prev_skip_adverbs(i);
  PosTag p_tag = p != std::string::npos ? tokens[p].tag : PosTag::kPunctuation;
  bool after_aux = p != std::string::npos && lex.auxiliary_lemma(lower[p]).has_value() &&
                   p_tag == PosTag::kVerb;
  std::size_t pc = prev_skip_insert(i);
  bool after_coordinator = pc != std::string::npos && (lower[pc] == "and" || lower[pc] == "or");
  std::size_t before_coord =
      after_coordinator ? prev_skip_adverbs(pc) : std::string::npos;
  PosTag coord_tag =
      before_coord != std::string::npos ? tokens[before_coord].tag : PosTag::kPunctuation;

  if (lex.is_verb(lemma)) {
    bool base = lemma == w;
    if (base && prev != std::string::npos && lower[prev] == "to") return PosTag::kVerb;
    if (after_aux && participle_form) return PosTag::kPastParticiple;
    if (after_coordinator && is_verbal(coord_tag)) {
      return participle_form ? PosTag::kPastParticiple : coord_tag;
    }
    if (!base && ends_with(w, "s") && !participle_form && p != std::string::npos &&
        is_nominal(p_tag)) {
      return PosTag::kVerb;
    }
    if (base && after_coordinator && next_is_determiner()) return PosTag::kVerb;
    if (base && p != std::string::npos && p_tag == PosTag::kPronoun &&
        (lower[p] == "they" || lower[p] == "we" || lower[p] == "it")) {
      return PosTag::kVerb;
    }
  }

  if (participle_form) {
    if (lex.is_irregular_participle(w)) {
      if (after_aux || is_nominal(p_tag) || (after_coordinator && is_verbal(coord_tag))) {
        return PosTag::kPastParticiple;
      }
    } else {
      return PosTag::kPastParticiple;
    }
  }
  if (lex.is_adjective(w)) return PosTag::kAdjective;
  if (text::is_upper(t[0])) {
    bool all_caps = t.size() > 1 && text::is_upper(t[1]);
    if (i > 0 || all_caps) return PosTag::kProperNoun;
  }
  if (ends_with(w, "ing") && w.size() > 5) {
    if (p_tag == PosTag::kDeterminer || p_tag == PosTag::kAdjective) return PosTag::kAdjective;
    if (p_tag == PosTag::kNoun || p_tag == PosTag::kProperNoun) return PosTag::kNoun;
    return PosTag::kVerb;
  }
  for (std::string_view s : {"tion", "sion", "ment", "ness", "ity", "ance", "ence", "ship",
                             "ism", "ist", "ogy"}) {
    if (ends_with(w, s) && w.size() > s.size() + 2) return PosTag::kNoun;
  }
  if (ends_with(w, "ly") && w.size() > 4 && !lex.is_ly_exception(w)) return PosTag::kAdverb;
  for (std::string_view s : {"al", "ive", "ous", "ible", "able", "ful", "ic", "ary"}) {
    if (ends_with(w, s) && w.size() > s.size() + 2) return PosTag::kAdjective;
  }
  return PosTag::kNoun;
}

std::vector<VerbGroup> find_verb_groups(const std::vector<Token>& tokens,
                                        const Lexicon& lexicon) {
  std::vector<VerbGroup> groups;
  const std::size_t n = tokens.size();
  auto skip_adverbs = [&](std::size_t k) {
    while (k < n && tokens[k].tag == PosTag::kAdverb &&
           !lexicon.is_particle(text::to_lower(tokens[k].text))) {
      ++k;
    }
    return k;
  };
  auto is_aux = [&](const Token& t) {
    return t.tag == PosTag::kVerb && lexicon.auxiliary_lemma(text::to_lower(t.text));
  };

  std::size_t i = 0;
  while (i < n) {
    VerbGroup g;
    g.begin = i;
    std::size_t j = i;
    if (tokens[i].tag == PosTag::kModalVerb) {
      g.modal = i;
      j = skip_adverbs(i + 1);
      if (j < n && tokens[j].text == ",") {
        for (std::size_t k = j + 1; k < n && k < j + 12; ++k) {
          if (tokens[k].text != ",") continue;
          std::size_t v = skip_adverbs(k + 1);
          if (v < n && is_verbal(tokens[v].tag)) {
            g.insert_begin = j;
            g.insert_end = k + 1;
            j = v;
          }
          break;
        }
      }
      if (j >= n || !is_verbal(tokens[j].tag)) {
        ++i;
        continue;
      }
    } else if (!is_verbal(tokens[i].tag)) {
      ++i;
      continue;
    }

    std::size_t head = j;
    while (is_aux(tokens[head])) {
      std::size_t k = skip_adverbs(head + 1);
      if (k < n && is_verbal(tokens[k].tag)) {
        head = k;
      } else {
        break;
      }
    }
    g.head = head;
    g.end = head + 1;
    if (g.end < n && tokens[g.end].tag == PosTag::kAdverb &&
        lexicon.is_particle(text::to_lower(tokens[g.end].text))) {
      ++g.end;
    }
    if (tokens[head].tag == PosTag::kPastParticiple && head > g.begin) {
      std::size_t k = head;
      while (k > g.begin && tokens[k - 1].tag == PosTag::kAdverb) --k;
      g.is_passive = k > g.begin && tokens[k - 1].lemma == "be";
    }
    if (g.begin > 0) {
      std::size_t p = g.begin - 1;
      while (p > 0 && tokens[p].tag == PosTag::kAdverb) --p;
      std::string pl = text::to_lower(tokens[p].text);
      if (pl == "to") {
        g.is_infinitive = !g.modal;
      } else if ((pl == "and" || pl == "or") && !groups.empty() &&
                 groups.back().end == p && groups.back().is_infinitive) {
        g.is_infinitive = true;
      }
    }
    groups.push_back(g);
    i = g.end;
  }
  if (groups.empty()) {
    throw Error(ErrorCode::kNoVerbFound, "no verb group in token sequence");
  }
  return groups;
}

}  // namespace nisonto::nlp
