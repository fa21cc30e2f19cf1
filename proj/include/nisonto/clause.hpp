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

#ifndef NISONTO_CLAUSE_HPP_
#define NISONTO_CLAUSE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nisonto/document.hpp"
#include "nisonto/tagger.hpp"
#include "nisonto/text.hpp"

namespace nisonto::clause {

enum class ClausePattern { kSV, kSVC, kSVO, kSVA, kSVOA, kSVOC };

std::string_view pattern_name(ClausePattern p);
// Inverse of pattern_name; throws kInvalidInput on an unknown name.
ClausePattern parse_pattern(std::string_view name);

// Where a sentence came from.
struct SentenceRef {
  int article = 0;
  std::string item;
  int sentence = 1;
  std::string row_id;
};

// A slot value: the exact sentence substring and its byte span.
struct Phrase {
  std::string text;
  text::Span span;

  bool operator==(const Phrase&) const = default;
};

struct Clause {
  ClausePattern pattern = ClausePattern::kSV;
  std::optional<Phrase> subject;
  Phrase verb;             // "shall participate"
  std::string verb_head;   // surface form of the head, "participate"
  std::string verb_lemma;  // "participate"
  bool passive = false;
  std::optional<Phrase> object;
  std::optional<Phrase> complement;
  std::vector<Phrase> adverbials;
  // Set when the adverbial is required by a copular verb ("be in charge").
  bool obligatory_adverbial = false;
  bool is_fallback_object = false;
  bool subject_inherited = false;
  SentenceRef source;
  std::vector<Clause> nested;

  // The object-like slot used for tabulation: object, else complement.
  const std::optional<Phrase>& object_like() const { return object ? object : complement; }
};

// Pattern implied by the filled slots of `c`.
ClausePattern pattern_for(const Clause& c);

// Sentence suffix after the last token of `vg`, without the final full stop.
// Throws kEmptyTail when nothing follows the verb group.
Phrase fallback_object(std::string_view sentence, const std::vector<nlp::Token>& tokens,
                       const nlp::VerbGroup& vg);

// Result for one sentence. Unextractable sentences keep their place with an
// error message and no clauses.
struct SentenceExtraction {
  SentenceRef source;
  std::string sentence;
  std::vector<Clause> clauses;
  std::optional<std::string> error;
};

class Extractor {
 public:
  explicit Extractor(const nlp::Tagger& tagger) : tagger_(&tagger) {}

  // Top-level clauses of `sentence`, coordinated clauses as siblings and
  // "that"-complements as nested clauses. Throws kUnextractable when the
  // sentence has no usable verb group.
  std::vector<Clause> extract(std::string_view sentence, const SentenceRef& ref = {}) const;

  // Non-throwing variant over a whole document, in document order.
  std::vector<SentenceExtraction> extract_document(const ingest::DirectiveDocument& doc) const;

  const nlp::Tagger& tagger() const { return *tagger_; }

 private:
  const nlp::Tagger* tagger_;
};

}  // namespace nisonto::clause

#endif  // NISONTO_CLAUSE_HPP_
