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

#ifndef NISONTO_MAPPING_HPP_
#define NISONTO_MAPPING_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nisonto/lexicon.hpp"
#include "nisonto/tabulation.hpp"

namespace nisonto::mapping {

struct EntityName {
  std::string canonical;  // "MemberState"
  std::optional<std::string> acronym;

  bool operator==(const EntityName&) const = default;
};

struct PredicateName {
  std::string name;  // "compose"
  bool passive = false;
};

struct MeasureSpec {
  int article = 0;
  EntityName entity;
  std::string predicate;
  bool passive = false;
  std::string object_class;
  std::string source_row;  // row_id of the PosRow it came from
  bool from_gold = false;  // at least one slot was taken from the gold row
};

// A row that produced no measure, kept for manual review.
struct ReviewItem {
  int article = 0;
  std::string row_id;
  std::string slot;  // "subject", "verb" or "object"
  std::string value;
  std::string reason;
};

using GroupKey = std::pair<int, std::string>;  // (article, entity canonical)

struct DataDictionary {
  std::map<GroupKey, std::vector<MeasureSpec>> groups;
  std::vector<ReviewItem> review;

  std::size_t measure_count() const;
};

inline constexpr std::size_t kDefaultMaxObjectLength = 80;

class Mapper {
 public:
  Mapper(const nlp::Lexicon& lexicon, const nlp::Gazetteer& gazetteer)
      : lexicon_(&lexicon), gazetteer_(&gazetteer) {}

  // "Member States" -> {MemberState, MS}. Coordinated subjects ("ESA - CA",
  // "X and Y") join their parts with "And" and carry no acronym. Throws
  // kUnknownEntity when no noun head is found.
  EntityName normalize_entity(std::string_view subject) const;

  // "shall be composed" -> {compose, passive}. Throws kEmptyPredicate.
  PredicateName name_predicate(std::string_view verb_group) const;

  // Drops determiners, "that" and punctuation, substitutes gazetteer
  // acronyms for multi-word names and CamelCases the rest; "and"/"or" and
  // the end of an acronym become "-". Over-long names are cut at a word
  // boundary and suffixed with "-" and a 6-hex content hash so the result
  // fits in `max_len`. Throws kEmptyObjectName.
  std::string name_object(std::string_view object, std::size_t max_len = kDefaultMaxObjectLength) const;

  // One measure per row whose chosen slots are all non-empty. With
  // `prefer_gold`, a slot whose hit is Wrong is taken from the gold row when
  // the gold value is non-empty.
  DataDictionary build_dictionary(const std::vector<tab::PosRow>& rows, bool prefer_gold = true,
                                  std::size_t max_len = kDefaultMaxObjectLength) const;

 private:
  std::optional<EntityName> single_entity(std::string_view phrase) const;

  const nlp::Lexicon* lexicon_;
  const nlp::Gazetteer* gazetteer_;
};

// Dictionary key rendering "8:MemberState".
std::string group_key_string(const GroupKey& key);

}  // namespace nisonto::mapping

#endif  // NISONTO_MAPPING_HPP_
