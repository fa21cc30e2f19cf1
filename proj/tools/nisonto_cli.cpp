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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nisonto/error.hpp"
#include "nisonto/pipeline.hpp"

namespace {

template <typename T>
void set_path(const std::string& value, std::optional<T>& target) {
  if (!value.empty()) target = T(value);
}

}  // namespace

int main(int argc, char** argv) {
  using nisonto::pipeline::Config;
  using nisonto::pipeline::Stage;

  CLI::App app{"Compile directive text into an OWL compliance ontology."};
  app.set_version_flag("--version", std::string(nisonto::pipeline::kVersion));
  app.set_config("--config", "", "Read options from a key=value config file");
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string input, gold, lexicon, gazetteer, out_dir = "out";
  std::string ontology, abox, individual, article_class;
  bool prefer_extracted = false;

  app.add_option("--input", input, "Directive plaintext");
  app.add_option("--gold", gold, "Gold annotations CSV (article,row_id,subject,verb,object,passive)");
  app.add_option("--articles", cfg.articles, "Article range, e.g. 7..37")->capture_default_str();
  app.add_option("--namespace", cfg.ns, "Ontology namespace")->capture_default_str();
  app.add_option("--out-dir", out_dir, "Artifact directory")->capture_default_str();
  app.add_option("--lexicon", lexicon, "Lexicon JSON (default: builtin)");
  app.add_option("--gazetteer", gazetteer, "Gazetteer JSON (default: builtin)");
  app.add_flag("--prefer-extracted", prefer_extracted,
               "Never substitute gold values for wrong extractions");
  app.add_flag("--named-measures", cfg.named_measures, "Name the intersection class");
  app.add_flag("--subclass-mode", cfg.subclass_mode,
               "Emit compliant rdfs:subClassOf entity instead of equivalence");
  app.add_option("--max-object-length", cfg.max_object_length, "Longest object class name")
      ->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
    Stage stage;
  };
  const Sub subs[] = {
      {"ingest", "Parse the directive into document.json", Stage::kIngest},
      {"extract", "Extract clauses into clauses.jsonl", Stage::kExtract},
      {"tabulate", "Score extractions against gold into POS tables", Stage::kTabulate},
      {"map", "Build the Data Dictionary", Stage::kMap},
      {"build", "Write per-article Turtle and directive.ttl", Stage::kBuild},
      {"check", "Check an individual against an article class", Stage::kCheck},
      {"all", "Run every stage", Stage::kAll},
  };
  Stage stage = Stage::kAll;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&stage, st = s.stage] { stage = st; });
    if (s.stage == Stage::kCheck || s.stage == Stage::kAll) {
      sub->add_option("--ontology", ontology, "Turtle ontology (default: <out-dir>/directive.ttl)");
      sub->add_option("--abox", abox, "ABox JSON");
      sub->add_option("--individual", individual, "Individual IRI or local name");
      sub->add_option("--article", article_class, "Compliant class IRI or local name");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.input = input;
  cfg.out_dir = out_dir;
  cfg.prefer_gold = !prefer_extracted;
  set_path(gold, cfg.gold);
  set_path(lexicon, cfg.lexicon);
  set_path(gazetteer, cfg.gazetteer);
  set_path(ontology, cfg.ontology);
  set_path(abox, cfg.abox);
  if (!individual.empty()) cfg.individual = individual;
  if (!article_class.empty()) cfg.article_class = article_class;

  if ((stage == Stage::kIngest || stage == Stage::kAll) && input.empty()) {
    std::cerr << "error: --input is required for " << nisonto::pipeline::stage_name(stage) << "\n";
    return 2;
  }
  try {
    return nisonto::pipeline::run(cfg, stage, std::cout, std::cerr);
  } catch (const nisonto::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
