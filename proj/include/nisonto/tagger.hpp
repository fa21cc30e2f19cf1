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

#ifndef NISONTO_TAGGER_HPP_
#define NISONTO_TAGGER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nisonto/lexicon.hpp"
#include "nisonto/text.hpp"

namespace nisonto::nlp {

enum class PosTag {
  kNoun,
  kProperNoun,
  kVerb,
  kModalVerb,
  kPastParticiple,
  kAdjective,
  kAdverb,
  kDeterminer,
  kPreposition,
  kConjunction,
  kPronoun,
  kNumber,
  kPunctuation,
  kOther,
};

std::string_view tag_name(PosTag tag);

struct Token {
  std::string text;
  std::string lemma;
  PosTag tag = PosTag::kOther;
  text::Span span;  // byte offsets into the sentence
};

// Splits a sentence into word, number and punctuation tokens. A reference
// with an attached parenthesised part ("47(1)", "11(3)(a)") and a
// parenthesised group without spaces ("(EU)") stay single tokens.
std::vector<Token> tokenize(std::string_view sentence);

// Rebuilds a sentence from its tokens, using the original separators.
std::string detokenize(std::string_view sentence, const std::vector<Token>& tokens);

// Contiguous token run [begin, end) that forms a predicate:
// modal? adverb* auxiliary* head particle?
struct VerbGroup {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::optional<std::size_t> modal;
  std::size_t head = 0;
  bool is_passive = false;
  bool is_infinitive = false;
  // Comma-delimited insert between the modal and the rest, as token range
  // [insert_begin, insert_end); empty when equal.
  std::size_t insert_begin = 0;
  std::size_t insert_end = 0;

  // A group that can anchor a clause: it has a modal, or a non-infinitive
  // verb head, or is passive.
  bool is_finite(const std::vector<Token>& tokens) const;
};

// Deterministic lexicon + rule tagger. Priority: gazetteer phrases, closed
// class lexicon, verb context rules, suffix rules, capitalization, then Noun.
class Tagger {
 public:
  Tagger(const Lexicon& lexicon, const Gazetteer& gazetteer)
      : lexicon_(&lexicon), gazetteer_(&gazetteer) {}

  std::vector<Token> tag(std::vector<Token> tokens) const;

  const Lexicon& lexicon() const { return *lexicon_; }
  const Gazetteer& gazetteer() const { return *gazetteer_; }

 private:
  PosTag classify(const std::vector<Token>& tokens, std::size_t i,
                  const std::vector<std::string>& lower) const;

  const Lexicon* lexicon_;
  const Gazetteer* gazetteer_;
};

// Verb groups ordered by position. Throws kNoVerbFound when there is none.
std::vector<VerbGroup> find_verb_groups(const std::vector<Token>& tagged,
                                        const Lexicon& lexicon);

}  // namespace nisonto::nlp

#endif  // NISONTO_TAGGER_HPP_
