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

#ifndef NISONTO_PIPELINE_HPP_
#define NISONTO_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nisonto/clause.hpp"
#include "nisonto/mapping.hpp"
#include "nisonto/rdf.hpp"
#include "nisonto/tabulation.hpp"

namespace nisonto::pipeline {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Stage { kIngest, kExtract, kTabulate, kMap, kBuild, kCheck, kAll };

std::string_view stage_name(Stage s);
// Throws kInvalidInput.
Stage parse_stage(std::string_view name);

struct Config {
  std::filesystem::path input;
  std::string articles = "7..37";
  std::optional<std::filesystem::path> gold;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> gazetteer;
  std::string ns = std::string(rdf::kDefaultNamespace);
  std::filesystem::path out_dir = "out";
  bool prefer_gold = true;
  bool named_measures = false;
  bool subclass_mode = false;
  std::size_t max_object_length = mapping::kDefaultMaxObjectLength;

  // check stage; the ontology defaults to <out_dir>/directive.ttl.
  std::optional<std::filesystem::path> ontology;
  std::optional<std::filesystem::path> abox;
  std::optional<std::string> individual;
  std::optional<std::string> article_class;
};

// Artifact names, relative to the output directory.
namespace artifact {
inline constexpr std::string_view kDocument = "document.json";
inline constexpr std::string_view kClauses = "clauses.jsonl";
inline constexpr std::string_view kPosRows = "pos_rows.csv";
inline constexpr std::string_view kTabulationSummary = "tabulation_summary.json";
inline constexpr std::string_view kDictionary = "dictionary.json";
inline constexpr std::string_view kReview = "review.csv";
inline constexpr std::string_view kDirectiveTtl = "directive.ttl";
inline constexpr std::string_view kCompliance = "compliance.json";
inline constexpr std::string_view kManifest = "run_manifest.json";
}  // namespace artifact

// Gold rows with empty slots for every extracted sentence and sibling
// clause, used when no gold file is given.
std::vector<tab::GoldAnnotation> synthesize_gold(
    const std::vector<clause::SentenceExtraction>& extractions);

// Runs one stage (or all of them) and returns the exit status: 0, or 1 when
// a compliance check fails. A stage whose inputs and parameters match the
// manifest and whose outputs are intact is skipped. Throws
// kStageInputMissing when an earlier artifact is absent, and module errors
// otherwise. Progress goes to `log`, reports to `out`.
int run(const Config& config, Stage stage, std::ostream& out, std::ostream& log);

}  // namespace nisonto::pipeline

#endif  // NISONTO_PIPELINE_HPP_
