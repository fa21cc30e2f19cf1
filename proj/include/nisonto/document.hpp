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

#ifndef NISONTO_DOCUMENT_HPP_
#define NISONTO_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nisonto/text.hpp"

namespace nisonto::ingest {

// One sentence of an item. `text` is whitespace-collapsed and always ends in
// a terminator; `span` points back into the original source bytes.
struct Sentence {
  std::string text;
  int index_in_item = 1;
  bool synthesized = false;
  // Enumeration label ("a", "ii") for sentences produced by list expansion.
  std::optional<std::string> list_label;
  text::Span span;
};

struct Item {
  std::string label;
  text::Span span;  // item body, without the "N." marker
  std::vector<Sentence> sentences;

  // Row identifier used by the POS tables: "5" for a one-sentence item,
  // "3.2" for the second sentence of a multi-sentence item.
  std::string row_id(const Sentence& s) const;
};

struct Article {
  int number = 0;
  std::string title;
  std::vector<Item> items;
};

struct DirectiveDocument {
  std::string source_name;
  std::vector<Article> articles;
};

struct ArticleRange {
  int low = 7;
  int high = 37;

  bool contains(int n) const { return n >= low && n <= high; }
};

// Parses "7..37" (also accepts "7-37" and a single "8").
ArticleRange parse_article_range(std::string_view spec);

// Splits `source` into articles at "Article N" heading lines and keeps those
// inside `range`. Throws kNoArticlesFound / kMalformedHeading.
DirectiveDocument parse_directive(std::string_view source, ArticleRange range,
                                  std::string source_name = {});

// Rewrites an itemised enumeration ("stem: (a) x; (b) y.") into one full
// sentence per label. Text outside the enumeration passes through as
// unsynthesized segments that still need segment_sentences. Spans are
// relative to `item_text`.
std::vector<Sentence> expand_items(std::string_view item_text);

// Splits on sentence-final full stops. Dots inside parentheses, between
// digits, or after a known abbreviation do not split.
std::vector<Sentence> segment_sentences(std::string_view item_text);

}  // namespace nisonto::ingest

#endif  // NISONTO_DOCUMENT_HPP_
