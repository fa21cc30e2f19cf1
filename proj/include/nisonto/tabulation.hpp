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

#ifndef NISONTO_TABULATION_HPP_
#define NISONTO_TABULATION_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nisonto/clause.hpp"

namespace nisonto::tab {

enum class HitMark { kCorrect, kWrong, kIncomplete, kNotApplicable };

std::string_view hit_name(HitMark h);    // "Correct", ...
std::string_view hit_symbol(HitMark h);  // "OK", "X", "PART", "P"
// Accepts either form. Throws kInvalidInput.
HitMark parse_hit(std::string_view s);

struct GoldAnnotation {
  int article = 0;
  std::string row_id;
  std::string subject;
  std::string verb;
  std::string object;
  bool passive = false;
};

// Extracted slot values for one row, as rendered in the "I-" columns.
struct ExtractedRow {
  int article = 0;
  std::string row_id;
  std::string subject;
  std::string verb;    // head verb, "P - <head>" when passive
  std::string object;  // may hold alternatives "a) x | b) y"
  bool passive = false;
};

struct PosRow {
  int article = 0;
  std::string row_id;
  std::string gold_subject, extracted_subject;
  HitMark subject_hit = HitMark::kWrong;
  std::string gold_verb, extracted_verb;
  HitMark verb_hit = HitMark::kWrong;
  std::string gold_object, extracted_object;
  HitMark object_hit = HitMark::kWrong;
  bool passive = false;
};

// Case-folds, collapses whitespace, trims surrounding punctuation and drops
// the passive markers "P - " / "PASSIVE - " (a bare "P", "PASSIVE" or "-"
// becomes empty). The literal "none" is kept.
std::string normalize(std::string_view s);

// Splits "a) x | b) y" into {"x", "y"}; any other value is returned as the
// single alternative.
std::vector<std::string> alternatives(std::string_view extracted);

// Hit mark for one slot. Extracted "NONE" counts as no extraction.
HitMark score(std::string_view gold, std::string_view extracted);

// Reads `article,row_id,subject,verb,object,passive` CSV with a header.
// Throws kInvalidInput on a malformed row, kDuplicateRow on a repeated key.
std::vector<GoldAnnotation> parse_gold_csv(std::string_view text);

// One row per sentence from its first top-level clause, plus one
// "item.sentence.clause" keyed row per top-level clause.
std::vector<ExtractedRow> rows_from_extractions(
    const std::vector<clause::SentenceExtraction>& extractions);
ExtractedRow row_from_clause(const clause::Clause& c);

// One PosRow per gold row, in gold order. Throws kDuplicateRow.
std::vector<PosRow> tabulate(const std::vector<GoldAnnotation>& gold,
                             const std::vector<ExtractedRow>& extracted);

struct SlotCounts {
  std::map<HitMark, int> counts;
  int get(HitMark h) const;
  int total() const;
};

struct ArticleSummary {
  int article = 0;
  int rows = 0;
  SlotCounts subject, verb, object;
};

// Per-article hit counts, ordered by article.
std::vector<ArticleSummary> summarize(const std::vector<PosRow>& rows);

// Table with columns N,Sub,I-Sub,Sub-HIT,Verb,I-Verb,Verb-HIT,Obj,I-Obj,Obj-HIT.
std::string render_article_csv(const std::vector<PosRow>& rows);

}  // namespace nisonto::tab

#endif  // NISONTO_TABULATION_HPP_
