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

#include "nisonto/serialize.hpp"

#include <fstream>
#include <sstream>

#include "nisonto/csv.hpp"
#include "nisonto/error.hpp"

namespace nisonto {

namespace csv {

std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  int line = 1;
  int quote_line = 0;
  auto end_row = [&] {
    if (field_started || !row.empty()) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
    }
    row.clear();
    field.clear();
    field_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        quote_line = line;
        field_started = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kInvalidInput,
                "unterminated quoted field starting on line " + std::to_string(quote_line));
  }
  end_row();
  return rows;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_row(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += escape(row[i]);
  }
  return out + "\n";
}

}  // namespace csv

namespace io {

namespace {

template <typename F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + ": " + e.what());
  }
}

json span_json(const text::Span& s) { return json::array({s.begin, s.end}); }

text::Span span_from(const json& j) {
  return text::Span{j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

json phrase_json(const clause::Phrase& p) { return {{"text", p.text}, {"span", span_json(p.span)}}; }

clause::Phrase phrase_from(const json& j) {
  return clause::Phrase{j.at("text").get<std::string>(), span_from(j.at("span"))};
}

json opt_phrase(const std::optional<clause::Phrase>& p) {
  return p ? phrase_json(*p) : json(nullptr);
}

std::optional<clause::Phrase> opt_phrase_from(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return phrase_from(*it);
}

json ref_json(const clause::SentenceRef& r) {
  return {{"article", r.article}, {"item", r.item}, {"sentence", r.sentence}, {"row_id", r.row_id}};
}

clause::SentenceRef ref_from(const json& j) {
  return clause::SentenceRef{j.at("article").get<int>(), j.at("item").get<std::string>(),
                             j.at("sentence").get<int>(), j.at("row_id").get<std::string>()};
}

json restriction_json(const onto::ExistentialRestriction& r) {
  return {{"property", r.property.value}, {"filler", r.filler.value}};
}

bool parse_bool(const std::string& s, int line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorCode::kInvalidInput, "line " + std::to_string(line) + ": bad boolean '" + s + "'");
}

const csv::Row kPosHeader = {"article",          "row_id",     "gold_subject",   "extracted_subject",
                             "subject_hit",      "gold_verb",  "extracted_verb", "verb_hit",
                             "gold_object",      "extracted_object", "object_hit", "passive"};

}  // namespace

json to_json(const ingest::DirectiveDocument& doc) {
  json articles = json::array();
  for (const auto& a : doc.articles) {
    json items = json::array();
    for (const auto& item : a.items) {
      json sentences = json::array();
      for (const auto& s : item.sentences) {
        json js = {{"text", s.text},
                   {"index", s.index_in_item},
                   {"row_id", item.row_id(s)},
                   {"synthesized", s.synthesized},
                   {"span", span_json(s.span)}};
        js["list_label"] = s.list_label ? json(*s.list_label) : json(nullptr);
        sentences.push_back(std::move(js));
      }
      items.push_back({{"label", item.label}, {"span", span_json(item.span)}, {"sentences", sentences}});
    }
    articles.push_back({{"number", a.number}, {"title", a.title}, {"items", items}});
  }
  return {{"source_name", doc.source_name}, {"articles", articles}};
}

ingest::DirectiveDocument document_from_json(const json& j) {
  return guarded("document", [&] {
    ingest::DirectiveDocument doc;
    doc.source_name = j.at("source_name").get<std::string>();
    for (const auto& ja : j.at("articles")) {
      ingest::Article a;
      a.number = ja.at("number").get<int>();
      a.title = ja.at("title").get<std::string>();
      for (const auto& ji : ja.at("items")) {
        ingest::Item item;
        item.label = ji.at("label").get<std::string>();
        item.span = span_from(ji.at("span"));
        for (const auto& js : ji.at("sentences")) {
          ingest::Sentence s;
          s.text = js.at("text").get<std::string>();
          s.index_in_item = js.at("index").get<int>();
          s.synthesized = js.at("synthesized").get<bool>();
          if (!js.at("list_label").is_null()) s.list_label = js.at("list_label").get<std::string>();
          s.span = span_from(js.at("span"));
          item.sentences.push_back(std::move(s));
        }
        a.items.push_back(std::move(item));
      }
      doc.articles.push_back(std::move(a));
    }
    return doc;
  });
}

json to_json(const clause::Clause& c) {
  json adverbials = json::array();
  for (const auto& a : c.adverbials) adverbials.push_back(phrase_json(a));
  json nested = json::array();
  for (const auto& n : c.nested) nested.push_back(to_json(n));
  return {{"pattern", clause::pattern_name(c.pattern)},
          {"subject", opt_phrase(c.subject)},
          {"verb", phrase_json(c.verb)},
          {"verb_head", c.verb_head},
          {"verb_lemma", c.verb_lemma},
          {"passive", c.passive},
          {"object", opt_phrase(c.object)},
          {"complement", opt_phrase(c.complement)},
          {"adverbials", adverbials},
          {"obligatory_adverbial", c.obligatory_adverbial},
          {"fallback_object", c.is_fallback_object},
          {"subject_inherited", c.subject_inherited},
          {"source", ref_json(c.source)},
          {"nested", nested}};
}

clause::Clause clause_from_json(const json& j) {
  return guarded("clause", [&] {
    clause::Clause c;
    c.pattern = clause::parse_pattern(j.at("pattern").get<std::string>());
    c.subject = opt_phrase_from(j, "subject");
    c.verb = phrase_from(j.at("verb"));
    c.verb_head = j.at("verb_head").get<std::string>();
    c.verb_lemma = j.at("verb_lemma").get<std::string>();
    c.passive = j.at("passive").get<bool>();
    c.object = opt_phrase_from(j, "object");
    c.complement = opt_phrase_from(j, "complement");
    for (const auto& a : j.at("adverbials")) c.adverbials.push_back(phrase_from(a));
    c.obligatory_adverbial = j.at("obligatory_adverbial").get<bool>();
    c.is_fallback_object = j.at("fallback_object").get<bool>();
    c.subject_inherited = j.at("subject_inherited").get<bool>();
    c.source = ref_from(j.at("source"));
    for (const auto& n : j.at("nested")) c.nested.push_back(clause_from_json(n));
    return c;
  });
}

json to_json(const clause::SentenceExtraction& e) {
  json clauses = json::array();
  for (const auto& c : e.clauses) clauses.push_back(to_json(c));
  return {{"source", ref_json(e.source)},
          {"sentence", e.sentence},
          {"clauses", clauses},
          {"error", e.error ? json(*e.error) : json(nullptr)}};
}

clause::SentenceExtraction extraction_from_json(const json& j) {
  return guarded("extraction", [&] {
    clause::SentenceExtraction e;
    e.source = ref_from(j.at("source"));
    e.sentence = j.at("sentence").get<std::string>();
    for (const auto& c : j.at("clauses")) e.clauses.push_back(clause_from_json(c));
    if (!j.at("error").is_null()) e.error = j.at("error").get<std::string>();
    return e;
  });
}

std::string write_jsonl(const std::vector<clause::SentenceExtraction>& extractions) {
  std::string out;
  for (const auto& e : extractions) out += to_json(e).dump() + "\n";
  return out;
}

std::vector<clause::SentenceExtraction> read_jsonl(std::string_view text) {
  std::vector<clause::SentenceExtraction> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (text::trim(line).empty()) continue;
    out.push_back(extraction_from_json(parse_json(line, "line " + std::to_string(n))));
  }
  return out;
}

std::string write_pos_csv(const std::vector<tab::PosRow>& rows) {
  std::string out = csv::format_row(kPosHeader);
  for (const auto& r : rows) {
    out += csv::format_row({std::to_string(r.article), r.row_id, r.gold_subject, r.extracted_subject,
                            std::string(tab::hit_name(r.subject_hit)), r.gold_verb, r.extracted_verb,
                            std::string(tab::hit_name(r.verb_hit)), r.gold_object, r.extracted_object,
                            std::string(tab::hit_name(r.object_hit)), r.passive ? "true" : "false"});
  }
  return out;
}

std::vector<tab::PosRow> read_pos_csv(std::string_view text) {
  auto rows = csv::parse(text);
  if (rows.empty() || rows.front() != kPosHeader) {
    throw Error(ErrorCode::kInvalidInput, "POS table: unexpected header");
  }
  std::vector<tab::PosRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    int line = static_cast<int>(i) + 1;
    if (r.size() != kPosHeader.size()) {
      throw Error(ErrorCode::kInvalidInput, "POS table line " + std::to_string(line) + ": expected " +
                                                std::to_string(kPosHeader.size()) + " fields");
    }
    tab::PosRow p;
    try {
      p.article = std::stoi(r[0]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput, "POS table line " + std::to_string(line) + ": bad article");
    }
    p.row_id = r[1];
    p.gold_subject = r[2];
    p.extracted_subject = r[3];
    p.subject_hit = tab::parse_hit(r[4]);
    p.gold_verb = r[5];
    p.extracted_verb = r[6];
    p.verb_hit = tab::parse_hit(r[7]);
    p.gold_object = r[8];
    p.extracted_object = r[9];
    p.object_hit = tab::parse_hit(r[10]);
    p.passive = parse_bool(r[11], line);
    out.push_back(std::move(p));
  }
  return out;
}

json to_json(const mapping::DataDictionary& d) {
  json groups = json::array();
  for (const auto& [key, measures] : d.groups) {
    json ms = json::array();
    for (const auto& m : measures) {
      ms.push_back({{"predicate", m.predicate},
                    {"passive", m.passive},
                    {"object_class", m.object_class},
                    {"source_row", m.source_row},
                    {"from_gold", m.from_gold}});
    }
    const auto& e = measures.front().entity;
    groups.push_back({{"key", mapping::group_key_string(key)},
                      {"article", key.first},
                      {"entity", e.canonical},
                      {"acronym", e.acronym ? json(*e.acronym) : json(nullptr)},
                      {"measures", ms}});
  }
  json review = json::array();
  for (const auto& r : d.review) {
    review.push_back({{"article", r.article},
                      {"row_id", r.row_id},
                      {"slot", r.slot},
                      {"value", r.value},
                      {"reason", r.reason}});
  }
  return {{"measure_count", d.measure_count()}, {"groups", groups}, {"review", review}};
}

mapping::DataDictionary dictionary_from_json(const json& j) {
  return guarded("dictionary", [&] {
    mapping::DataDictionary d;
    for (const auto& g : j.at("groups")) {
      mapping::EntityName e{g.at("entity").get<std::string>(), std::nullopt};
      if (!g.at("acronym").is_null()) e.acronym = g.at("acronym").get<std::string>();
      int article = g.at("article").get<int>();
      auto& measures = d.groups[{article, e.canonical}];
      for (const auto& m : g.at("measures")) {
        mapping::MeasureSpec spec;
        spec.article = article;
        spec.entity = e;
        spec.predicate = m.at("predicate").get<std::string>();
        spec.passive = m.at("passive").get<bool>();
        spec.object_class = m.at("object_class").get<std::string>();
        spec.source_row = m.at("source_row").get<std::string>();
        spec.from_gold = m.at("from_gold").get<bool>();
        measures.push_back(std::move(spec));
      }
    }
    for (const auto& r : j.at("review")) {
      d.review.push_back({r.at("article").get<int>(), r.at("row_id").get<std::string>(),
                          r.at("slot").get<std::string>(), r.at("value").get<std::string>(),
                          r.at("reason").get<std::string>()});
    }
    return d;
  });
}

json to_json(const check::ComplianceReport& r) {
  json satisfied = json::array();
  for (const auto& x : r.satisfied) satisfied.push_back(restriction_json(x));
  json missing = json::array();
  for (const auto& x : r.missing) missing.push_back(restriction_json(x));
  return {{"individual", r.individual.value},
          {"article_class", r.article_class.value},
          {"compliant", r.compliant},
          {"mode", r.mode},
          {"satisfied", satisfied},
          {"missing", missing}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace io

}  // namespace nisonto
