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

#include "nisonto/pipeline.hpp"

#include <future>
#include <map>
#include <memory>
#include <ostream>

#include "nisonto/compliance.hpp"
#include "nisonto/csv.hpp"
#include "nisonto/document.hpp"
#include "nisonto/error.hpp"
#include "nisonto/hash.hpp"
#include "nisonto/lexicon.hpp"
#include "nisonto/ontology.hpp"
#include "nisonto/serialize.hpp"
#include "nisonto/turtle.hpp"

namespace nisonto::nlp {
extern const std::string_view kDefaultLexiconJson;
extern const std::string_view kDefaultGazetteerJson;
}  // namespace nisonto::nlp

namespace nisonto::pipeline {

namespace fs = std::filesystem;
using io::json;

namespace {

constexpr Stage kOrder[] = {Stage::kIngest, Stage::kExtract, Stage::kTabulate,
                            Stage::kMap,    Stage::kBuild,   Stage::kCheck, Stage::kAll};

using Outputs = std::map<std::string, std::string>;  // relative path -> content

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out, std::ostream& log)
      : cfg_(cfg), out_(out), log_(log) {
    fs::create_directories(cfg_.out_dir);
    fs::path mpath = cfg_.out_dir / artifact::kManifest;
    if (fs::exists(mpath)) {
      try {
        manifest_ = json::parse(io::read_file(mpath));
      } catch (const json::exception&) {
        log_ << "[manifest] unreadable, starting fresh\n";
      }
    }
    if (!manifest_.is_object() || !manifest_.contains("stages")) {
      manifest_ = {{"stages", json::object()}};
    }
    manifest_["tool"] = "nisonto";
    manifest_["version"] = kVersion;
  }

  int run(Stage stage) {
    if (stage != Stage::kAll) return run_one(stage, true);
    for (Stage s : kOrder) {
      if (s != Stage::kAll) run_one(s, false);
    }
    return 0;
  }

 private:
  int run_one(Stage s, bool explicit_stage) {
    switch (s) {
      case Stage::kIngest: ingest(); return 0;
      case Stage::kExtract: extract(); return 0;
      case Stage::kTabulate: tabulate(); return 0;
      case Stage::kMap: map(); return 0;
      case Stage::kBuild: build(); return 0;
      case Stage::kCheck: return check(explicit_stage);
      case Stage::kAll: break;
    }
    return 0;
  }

  // ---- inputs ----

  fs::path out_path(std::string_view rel) const { return cfg_.out_dir / fs::path(std::string(rel)); }

  std::string require(const fs::path& path, std::string_view stage, std::string_view what) const {
    if (!fs::exists(path)) {
      throw Error(ErrorCode::kStageInputMissing, std::string(stage) + ": " + std::string(what) + " " +
                                                     path.string() + " not found");
    }
    return io::read_file(path);
  }

  std::string artifact_input(std::string_view rel, std::string_view stage, json& inputs) const {
    std::string content = require(out_path(rel), stage, "artifact");
    inputs[std::string(rel)] = {{"sha256", hash::sha256_hex(content)}};
    return content;
  }

  std::string external_input(const fs::path& path, std::string_view role, std::string_view stage,
                             json& inputs) const {
    std::string content = require(path, stage, role);
    inputs[std::string(role)] = {{"file", path.filename().string()},
                                 {"sha256", hash::sha256_hex(content)}};
    return content;
  }

  const nlp::Lexicon& lexicon(json& inputs) {
    if (!lexicon_) {
      if (cfg_.lexicon) {
        lexicon_text_ = require(*cfg_.lexicon, "lexicon", "file");
        owned_lexicon_ = std::make_unique<nlp::Lexicon>(nlp::Lexicon::from_json(lexicon_text_));
        lexicon_ = owned_lexicon_.get();
      } else {
        lexicon_text_ = std::string(nlp::kDefaultLexiconJson);
        lexicon_ = &nlp::Lexicon::builtin();
      }
    }
    inputs["lexicon"] = {{"file", cfg_.lexicon ? cfg_.lexicon->filename().string() : "<builtin>"},
                         {"version", lexicon_->version()},
                         {"sha256", hash::sha256_hex(lexicon_text_)}};
    return *lexicon_;
  }

  const nlp::Gazetteer& gazetteer(json& inputs) {
    const nlp::Lexicon& lex = lexicon(inputs);
    if (!gazetteer_) {
      if (cfg_.gazetteer) {
        gazetteer_text_ = require(*cfg_.gazetteer, "gazetteer", "file");
        owned_gazetteer_ = std::make_unique<nlp::Gazetteer>(nlp::Gazetteer::from_json(gazetteer_text_, lex));
        gazetteer_ = owned_gazetteer_.get();
      } else if (cfg_.lexicon) {
        // The builtin gazetteer keys depend on the lexicon's singularizer.
        gazetteer_text_ = std::string(nlp::kDefaultGazetteerJson);
        owned_gazetteer_ = std::make_unique<nlp::Gazetteer>(nlp::Gazetteer::from_json(gazetteer_text_, lex));
        gazetteer_ = owned_gazetteer_.get();
      } else {
        gazetteer_text_ = std::string(nlp::kDefaultGazetteerJson);
        gazetteer_ = &nlp::Gazetteer::builtin();
      }
    }
    inputs["gazetteer"] = {
        {"file", cfg_.gazetteer ? cfg_.gazetteer->filename().string() : "<builtin>"},
        {"version", gazetteer_->version()},
        {"sha256", hash::sha256_hex(gazetteer_text_)}};
    return *gazetteer_;
  }

  // ---- manifest ----

  bool up_to_date(std::string_view stage, const json& inputs, const json& params) const {
    const json& stages = manifest_["stages"];
    auto it = stages.find(std::string(stage));
    if (it == stages.end()) return false;
    if (it->value("inputs", json()) != inputs || it->value("params", json()) != params) return false;
    auto outs = it->find("outputs");
    if (outs == it->end() || !outs->is_object()) return false;
    for (const auto& [rel, entry] : outs->items()) {
      fs::path p = out_path(rel);
      if (!fs::exists(p) || hash::sha256_hex(io::read_file(p)) != entry.value("sha256", "")) {
        return false;
      }
    }
    log_ << "[" << stage << "] inputs unchanged, skipped\n";
    return true;
  }

  void commit(std::string_view stage, const json& inputs, const json& params, const Outputs& outputs) {
    json outs = json::object();
    for (const auto& [rel, content] : outputs) {
      io::write_file(out_path(rel), content);
      outs[rel] = {{"sha256", hash::sha256_hex(content)}, {"bytes", content.size()}};
      log_ << "[" << stage << "] wrote " << rel << "\n";
    }
    manifest_["stages"][std::string(stage)] = {{"inputs", inputs}, {"params", params}, {"outputs", outs}};
    io::write_file(out_path(artifact::kManifest), io::dump(manifest_));
  }

  // ---- stages ----

  void ingest() {
    json inputs = json::object();
    std::string source = external_input(cfg_.input, "input", "ingest", inputs);
    ingest::ArticleRange range = ingest::parse_article_range(cfg_.articles);
    json params = {{"articles", std::to_string(range.low) + ".." + std::to_string(range.high)}};
    if (up_to_date("ingest", inputs, params)) return;
    auto doc = ingest::parse_directive(source, range, cfg_.input.filename().string());
    commit("ingest", inputs, params, {{std::string(artifact::kDocument), io::dump(io::to_json(doc))}});
  }

  void extract() {
    json inputs = json::object();
    std::string text = artifact_input(artifact::kDocument, "extract", inputs);
    const nlp::Gazetteer& gaz = gazetteer(inputs);
    json params = json::object();
    if (up_to_date("extract", inputs, params)) return;

    auto doc = io::document_from_json(io::parse_json(text, artifact::kDocument));
    nlp::Tagger tagger(*lexicon_, gaz);
    clause::Extractor extractor(tagger);
    std::vector<std::future<std::vector<clause::SentenceExtraction>>> jobs;
    for (const auto& article : doc.articles) {
      jobs.push_back(std::async(std::launch::async, [&extractor, &doc, &article] {
        ingest::DirectiveDocument one{doc.source_name, {article}};
        return extractor.extract_document(one);
      }));
    }
    std::vector<clause::SentenceExtraction> all;
    for (auto& j : jobs) {
      auto part = j.get();
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    commit("extract", inputs, params, {{std::string(artifact::kClauses), io::write_jsonl(all)}});
  }

  void tabulate() {
    json inputs = json::object();
    std::string text = artifact_input(artifact::kClauses, "tabulate", inputs);
    std::string gold_text;
    if (cfg_.gold) gold_text = external_input(*cfg_.gold, "gold", "tabulate", inputs);
    json params = {{"gold", cfg_.gold.has_value()}};
    if (up_to_date("tabulate", inputs, params)) return;

    auto extractions = io::read_jsonl(text);
    auto gold = cfg_.gold ? tab::parse_gold_csv(gold_text) : synthesize_gold(extractions);
    auto rows = tab::tabulate(gold, tab::rows_from_extractions(extractions));

    Outputs outputs;
    outputs[std::string(artifact::kPosRows)] = io::write_pos_csv(rows);
    std::map<int, std::vector<tab::PosRow>> by_article;
    for (const auto& r : rows) by_article[r.article].push_back(r);
    for (const auto& [article, article_rows] : by_article) {
      outputs["tables/article_" + std::to_string(article) + ".csv"] = tab::render_article_csv(article_rows);
    }
    json summary = json::array();
    for (const auto& s : tab::summarize(rows)) {
      auto counts = [](const tab::SlotCounts& c) {
        json j = json::object();
        for (auto h : {tab::HitMark::kCorrect, tab::HitMark::kIncomplete, tab::HitMark::kWrong,
                       tab::HitMark::kNotApplicable}) {
          j[std::string(tab::hit_name(h))] = c.get(h);
        }
        return j;
      };
      summary.push_back({{"article", s.article},
                         {"rows", s.rows},
                         {"subject", counts(s.subject)},
                         {"verb", counts(s.verb)},
                         {"object", counts(s.object)}});
    }
    outputs[std::string(artifact::kTabulationSummary)] = io::dump(summary);
    commit("tabulate", inputs, params, outputs);
  }

  void map() {
    json inputs = json::object();
    std::string text = artifact_input(artifact::kPosRows, "map", inputs);
    const nlp::Gazetteer& gaz = gazetteer(inputs);
    json params = {{"prefer_gold", cfg_.prefer_gold}, {"max_object_length", cfg_.max_object_length}};
    if (up_to_date("map", inputs, params)) return;

    mapping::Mapper mapper(*lexicon_, gaz);
    auto dict = mapper.build_dictionary(io::read_pos_csv(text), cfg_.prefer_gold, cfg_.max_object_length);
    std::string review = csv::format_row({"article", "row_id", "slot", "value", "reason"});
    for (const auto& r : dict.review) {
      review += csv::format_row({std::to_string(r.article), r.row_id, r.slot, r.value, r.reason});
    }
    commit("map", inputs, params,
           {{std::string(artifact::kDictionary), io::dump(io::to_json(dict))},
            {std::string(artifact::kReview), review}});
  }

  void build() {
    json inputs = json::object();
    std::string text = artifact_input(artifact::kDictionary, "build", inputs);
    json params = {{"namespace", cfg_.ns},
                   {"named_measures", cfg_.named_measures},
                   {"subclass_mode", cfg_.subclass_mode}};
    if (up_to_date("build", inputs, params)) return;

    auto dict = io::dictionary_from_json(io::parse_json(text, artifact::kDictionary));
    onto::BuildOptions options{cfg_.ns, cfg_.named_measures, cfg_.subclass_mode};
    auto ontology = onto::build_ontology(dict, options);
    Outputs outputs;
    for (const auto& [article, g] : ontology.per_article) {
      outputs["turtle/article_" + std::to_string(article) + ".ttl"] = rdf::serialize_turtle(g);
    }
    outputs[std::string(artifact::kDirectiveTtl)] = rdf::serialize_turtle(ontology.merged);
    commit("build", inputs, params, outputs);
  }

  int check(bool explicit_stage) {
    json inputs = json::object();
    fs::path ontology_path = cfg_.ontology ? *cfg_.ontology : out_path(artifact::kDirectiveTtl);
    std::string ttl = cfg_.ontology ? external_input(ontology_path, "ontology", "check", inputs)
                                    : artifact_input(artifact::kDirectiveTtl, "check", inputs);
    std::string abox_text;
    if (cfg_.abox) {
      abox_text = external_input(*cfg_.abox, "abox", "check", inputs);
    } else if (explicit_stage) {
      throw Error(ErrorCode::kStageInputMissing, "check: an ABox file is required (--abox)");
    }
    json params = {{"individual", cfg_.individual ? json(*cfg_.individual) : json(nullptr)},
                   {"article", cfg_.article_class ? json(*cfg_.article_class) : json(nullptr)}};

    rdf::Graph g = rdf::parse_turtle(ttl);
    auto classes = check::list_article_classes(g);
    json class_list = json::array();
    for (const auto& c : classes) class_list.push_back(c.value);

    json reports = json::array();
    bool all_ok = true;
    std::string summaries;
    if (cfg_.abox) {
      check::Abox abox = check::parse_abox(abox_text, g.ns());
      std::vector<rdf::Iri> individuals, targets;
      if (cfg_.individual) {
        individuals.push_back(check::resolve_name(*cfg_.individual, g.ns()));
      } else {
        for (const auto& [iri, ind] : abox.individuals()) {
          if (!ind.assertions.empty()) individuals.push_back(iri);
        }
      }
      if (cfg_.article_class) {
        targets.push_back(check::resolve_name(*cfg_.article_class, g.ns()));
      } else {
        targets = classes;
      }
      std::vector<std::future<check::ComplianceReport>> jobs;
      for (const auto& ind : individuals) {
        for (const auto& cls : targets) {
          jobs.push_back(std::async(std::launch::async,
                                    [&g, &abox, ind, cls] { return check::check(g, abox, ind, cls); }));
        }
      }
      for (auto& j : jobs) {
        auto report = j.get();
        all_ok = all_ok && report.compliant;
        summaries += check::summary(report);
        reports.push_back(io::to_json(report));
      }
    }
    json doc = {{"article_classes", class_list}, {"reports", reports}};
    if (!up_to_date("check", inputs, params)) {
      commit("check", inputs, params, {{std::string(artifact::kCompliance), io::dump(doc)}});
    }
    if (explicit_stage) {
      out_ << (reports.size() == 1 ? io::dump(reports[0]) : io::dump(doc)) << summaries;
      return all_ok ? 0 : 1;
    }
    return 0;
  }

  const Config& cfg_;
  std::ostream& out_;
  std::ostream& log_;
  json manifest_;

  const nlp::Lexicon* lexicon_ = nullptr;
  const nlp::Gazetteer* gazetteer_ = nullptr;
  std::unique_ptr<nlp::Lexicon> owned_lexicon_;
  std::unique_ptr<nlp::Gazetteer> owned_gazetteer_;
  std::string lexicon_text_;
  std::string gazetteer_text_;
};

}  // namespace

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kIngest: return "ingest";
    case Stage::kExtract: return "extract";
    case Stage::kTabulate: return "tabulate";
    case Stage::kMap: return "map";
    case Stage::kBuild: return "build";
    case Stage::kCheck: return "check";
    case Stage::kAll: return "all";
  }
  return "?";
}

Stage parse_stage(std::string_view name) {
  for (Stage s : kOrder) {
    if (stage_name(s) == name) return s;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown stage '" + std::string(name) + "'");
}

std::vector<tab::GoldAnnotation> synthesize_gold(
    const std::vector<clause::SentenceExtraction>& extractions) {
  std::vector<tab::GoldAnnotation> out;
  for (const auto& e : extractions) {
    tab::GoldAnnotation g;
    g.article = e.source.article;
    g.row_id = e.source.row_id;
    g.passive = !e.clauses.empty() && e.clauses.front().passive;
    out.push_back(g);
    for (std::size_t k = 1; k < e.clauses.size(); ++k) {
      g.passive = e.clauses[k].passive;
      g.row_id = e.source.item + "." + std::to_string(e.source.sentence) + "." + std::to_string(k + 1);
      out.push_back(g);
    }
  }
  return out;
}

int run(const Config& config, Stage stage, std::ostream& out, std::ostream& log) {
  Runner runner(config, out, log);
  return runner.run(stage);
}

}  // namespace nisonto::pipeline
