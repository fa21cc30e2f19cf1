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

#include "nisonto/tabulation.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "nisonto/csv.hpp"
#include "nisonto/error.hpp"
#include "nisonto/text.hpp"

namespace nisonto::tab {

namespace {

const std::set<std::string, std::less<>> kStopWords = {
    "a",  "an", "the", "of", "and", "or",  "to",  "in", "on",   "for",  "by",
    "at", "as", "that", "this", "its", "their", "with", "be", "is", "-"};

bool is_trim_char(char c) {
  return text::is_space(c) || c == '.' || c == ',' || c == ';' || c == ':' || c == '"' ||
         c == '\'';
}

bool bounded_find(std::string_view hay, std::string_view needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  for (std::size_t pos = hay.find(needle); pos != std::string_view::npos;
       pos = hay.find(needle, pos + 1)) {
    bool left = pos == 0 || !text::is_alnum(hay[pos - 1]);
    std::size_t end = pos + needle.size();
    bool right = end == hay.size() || !text::is_alnum(hay[end]);
    if (left && right) return true;
  }
  return false;
}

bool has_content_word(std::string_view s) {
  for (const auto& w : text::split_words(s)) {
    if (!kStopWords.contains(w)) return true;
  }
  return false;
}

int rank(HitMark h) {
  switch (h) {
    case HitMark::kCorrect: return 3;
    case HitMark::kIncomplete: return 2;
    case HitMark::kNotApplicable: return 1;
    case HitMark::kWrong: return 0;
  }
  return 0;
}

HitMark score_one(const std::string& g, const std::string& x) {
  if (x.empty() || x == "none") return g.empty() ? HitMark::kNotApplicable : HitMark::kWrong;
  if (g == x) return HitMark::kCorrect;
  if (g.empty()) return HitMark::kWrong;
  const std::string& shorter = g.size() < x.size() ? g : x;
  const std::string& longer = g.size() < x.size() ? x : g;
  if (bounded_find(longer, shorter) && has_content_word(shorter)) return HitMark::kIncomplete;
  return HitMark::kWrong;
}

bool parse_bool(std::string_view s) {
  std::string v = text::to_lower(text::trim(s));
  if (v == "true" || v == "1" || v == "yes" || v == "y" || v == "p") return true;
  if (v == "false" || v == "0" || v == "no" || v == "n" || v.empty()) return false;
  throw Error(ErrorCode::kInvalidInput, "not a boolean: '" + std::string(s) + "'");
}

std::string key(int article, const std::string& row_id) {
  return std::to_string(article) + ":" + row_id;
}

HitMark slot_hit(const std::string& gold, const std::string& extracted, bool passive) {
  std::string g = normalize(gold);
  std::string x = normalize(extracted);
  if (passive && g.empty()) return HitMark::kNotApplicable;
  if (g.empty() && x.empty()) return HitMark::kCorrect;
  return score(gold, extracted);
}

}  // namespace

std::string_view hit_name(HitMark h) {
  switch (h) {
    case HitMark::kCorrect: return "Correct";
    case HitMark::kWrong: return "Wrong";
    case HitMark::kIncomplete: return "Incomplete";
    case HitMark::kNotApplicable: return "NotApplicable";
  }
  return "Wrong";
}

std::string_view hit_symbol(HitMark h) {
  switch (h) {
    case HitMark::kCorrect: return "OK";
    case HitMark::kWrong: return "X";
    case HitMark::kIncomplete: return "PART";
    case HitMark::kNotApplicable: return "P";
  }
  return "X";
}

HitMark parse_hit(std::string_view s) {
  for (HitMark h : {HitMark::kCorrect, HitMark::kWrong, HitMark::kIncomplete,
                    HitMark::kNotApplicable}) {
    if (s == hit_name(h) || s == hit_symbol(h)) return h;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown hit mark '" + std::string(s) + "'");
}

std::string normalize(std::string_view s) {
  std::string v = text::collapse_whitespace(text::to_lower(s));
  std::size_t b = 0, e = v.size();
  while (b < e && is_trim_char(v[b])) ++b;
  while (e > b && is_trim_char(v[e - 1])) --e;
  v = v.substr(b, e - b);
  for (std::string_view marker : {"passive - ", "p - "}) {
    if (v.starts_with(marker)) {
      v = text::trim(v.substr(marker.size()));
      break;
    }
  }
  if (v == "p" || v == "passive" || v == "-") v.clear();
  return v;
}

std::vector<std::string> alternatives(std::string_view extracted) {
  std::string_view t = text::trim(extracted);
  auto labelled = [](std::string_view s) {
    return s.size() >= 2 && text::is_lower(s[0]) && s[1] == ')';
  };
  if (!labelled(t) || t.find('|') == std::string_view::npos) return {std::string(t)};
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t bar = t.find('|', start);
    std::string_view part = text::trim(
        t.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (labelled(part)) part = text::trim(part.substr(2));
    out.emplace_back(part);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

HitMark score(std::string_view gold, std::string_view extracted) {
  std::string g = normalize(gold);
  HitMark best = HitMark::kWrong;
  bool first = true;
  for (const auto& alt : alternatives(extracted)) {
    HitMark h = score_one(g, normalize(alt));
    if (first || rank(h) > rank(best)) best = h;
    first = false;
  }
  return best;
}

std::vector<GoldAnnotation> parse_gold_csv(std::string_view text) {
  auto rows = csv::parse(text);
  std::vector<GoldAnnotation> out;
  if (rows.empty()) return out;
  const csv::Row& header = rows.front();
  const std::vector<std::string> expected = {"article", "row_id", "subject",
                                             "verb",    "object", "passive"};
  std::vector<std::string> got;
  for (const auto& h : header) got.push_back(text::to_lower(text::trim(h)));
  if (got != expected) {
    throw Error(ErrorCode::kInvalidInput,
                "gold header must be article,row_id,subject,verb,object,passive");
  }
  std::set<std::string> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& r = rows[i];
    if (r.size() != expected.size()) {
      throw Error(ErrorCode::kInvalidInput, "gold line " + std::to_string(i + 1) + ": expected " +
                                                std::to_string(expected.size()) + " fields");
    }
    GoldAnnotation g;
    try {
      g.article = std::stoi(r[0]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput,
                  "gold line " + std::to_string(i + 1) + ": bad article '" + r[0] + "'");
    }
    g.row_id = std::string(text::trim(r[1]));
    g.subject = r[2];
    g.verb = r[3];
    g.object = r[4];
    g.passive = parse_bool(r[5]);
    if (!seen.insert(key(g.article, g.row_id)).second) {
      throw Error(ErrorCode::kDuplicateRow,
                  "repeated gold row " + std::to_string(g.article) + " " + g.row_id);
    }
    out.push_back(std::move(g));
  }
  return out;
}

ExtractedRow row_from_clause(const clause::Clause& c) {
  ExtractedRow r;
  r.article = c.source.article;
  r.row_id = c.source.row_id;
  r.passive = c.passive;
  if (c.subject) r.subject = c.subject->text;
  std::string head = c.verb_head;
  if (std::size_t at = c.verb.text.rfind(c.verb_head); at != std::string::npos && !head.empty()) {
    head = c.verb.text.substr(at);  // keeps a particle: "carry out"
  }
  r.verb = c.passive ? "P - " + head : head;
  if (c.complement && c.object && !c.nested.empty() && c.nested.front().object_like()) {
    // The that-clause and the nested object are both plausible readings.
    r.object = "a) " + c.complement->text + " | b) " + c.nested.front().object_like()->text;
  } else if (const auto& o = c.object_like()) {
    r.object = o->text;
  }
  return r;
}

std::vector<ExtractedRow> rows_from_extractions(
    const std::vector<clause::SentenceExtraction>& extractions) {
  std::vector<ExtractedRow> out;
  for (const auto& e : extractions) {
    if (e.clauses.empty()) {
      ExtractedRow r;
      r.article = e.source.article;
      r.row_id = e.source.row_id;
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(row_from_clause(e.clauses.front()));
    for (std::size_t k = 1; k < e.clauses.size(); ++k) {
      ExtractedRow r = row_from_clause(e.clauses[k]);
      r.row_id = e.source.item + "." + std::to_string(e.source.sentence) + "." +
                 std::to_string(k + 1);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<PosRow> tabulate(const std::vector<GoldAnnotation>& gold,
                             const std::vector<ExtractedRow>& extracted) {
  std::map<std::string, const ExtractedRow*> index;
  for (const auto& r : extracted) index.emplace(key(r.article, r.row_id), &r);

  std::set<std::string> seen;
  std::vector<PosRow> out;
  out.reserve(gold.size());
  for (const auto& g : gold) {
    std::string k = key(g.article, g.row_id);
    if (!seen.insert(k).second) {
      throw Error(ErrorCode::kDuplicateRow,
                  "repeated gold row " + std::to_string(g.article) + " " + g.row_id);
    }
    PosRow row;
    row.article = g.article;
    row.row_id = g.row_id;
    row.passive = g.passive;
    row.gold_subject = g.subject;
    row.gold_verb = g.verb;
    row.gold_object = g.object;
    auto it = index.find(k);
    if (it == index.end()) {
      row.subject_hit = row.verb_hit = row.object_hit = HitMark::kWrong;
      out.push_back(std::move(row));
      continue;
    }
    const ExtractedRow& x = *it->second;
    row.extracted_subject = x.subject;
    row.extracted_verb = x.verb;
    row.extracted_object = x.object;
    row.subject_hit = slot_hit(g.subject, x.subject, g.passive);
    row.verb_hit = slot_hit(g.verb, x.verb, g.passive);
    row.object_hit = slot_hit(g.object, x.object, g.passive);
    out.push_back(std::move(row));
  }
  return out;
}

int SlotCounts::get(HitMark h) const {
  auto it = counts.find(h);
  return it == counts.end() ? 0 : it->second;
}

int SlotCounts::total() const {
  int n = 0;
  for (const auto& [h, c] : counts) n += c;
  return n;
}

std::vector<ArticleSummary> summarize(const std::vector<PosRow>& rows) {
  std::map<int, ArticleSummary> by_article;
  for (const auto& r : rows) {
    ArticleSummary& s = by_article[r.article];
    s.article = r.article;
    ++s.rows;
    ++s.subject.counts[r.subject_hit];
    ++s.verb.counts[r.verb_hit];
    ++s.object.counts[r.object_hit];
  }
  std::vector<ArticleSummary> out;
  for (auto& [a, s] : by_article) out.push_back(std::move(s));
  return out;
}

std::string render_article_csv(const std::vector<PosRow>& rows) {
  std::string out = csv::format_row({"N", "Sub", "I-Sub", "Sub-HIT", "Verb", "I-Verb",
                                     "Verb-HIT", "Obj", "I-Obj", "Obj-HIT"});
  for (const auto& r : rows) {
    out += csv::format_row({r.row_id, r.gold_subject, r.extracted_subject,
                            std::string(hit_symbol(r.subject_hit)), r.gold_verb,
                            r.extracted_verb, std::string(hit_symbol(r.verb_hit)),
                            r.gold_object, r.extracted_object,
                            std::string(hit_symbol(r.object_hit))});
  }
  return out;
}

}  // namespace nisonto::tab
