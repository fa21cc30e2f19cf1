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

#ifndef NISONTO_SERIALIZE_HPP_
#define NISONTO_SERIALIZE_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nisonto/clause.hpp"
#include "nisonto/compliance.hpp"
#include "nisonto/document.hpp"
#include "nisonto/mapping.hpp"
#include "nisonto/tabulation.hpp"

namespace nisonto::io {

using nlohmann::json;

// Readers throw kInvalidInput on a missing or mistyped field.

json to_json(const ingest::DirectiveDocument& doc);
ingest::DirectiveDocument document_from_json(const json& j);

json to_json(const clause::Clause& c);
clause::Clause clause_from_json(const json& j);

json to_json(const clause::SentenceExtraction& e);
clause::SentenceExtraction extraction_from_json(const json& j);

// One extraction per line.
std::string write_jsonl(const std::vector<clause::SentenceExtraction>& extractions);
std::vector<clause::SentenceExtraction> read_jsonl(std::string_view text);

// Machine-readable POS table, one row per PosRow with a header.
std::string write_pos_csv(const std::vector<tab::PosRow>& rows);
std::vector<tab::PosRow> read_pos_csv(std::string_view text);

json to_json(const mapping::DataDictionary& d);
mapping::DataDictionary dictionary_from_json(const json& j);

json to_json(const check::ComplianceReport& r);

// Two-space indented with a trailing newline.
std::string dump(const json& j);
json parse_json(std::string_view text, std::string_view what);

// Throw kIo.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace nisonto::io

#endif  // NISONTO_SERIALIZE_HPP_
