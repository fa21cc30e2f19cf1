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

#include "nisonto/document.hpp"

#include <array>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nisonto/error.hpp"
#include "nisonto/text.hpp"

namespace nisonto::ingest {

namespace {

using text::Span;

constexpr std::array<std::string_view, 16> kAbbreviations = {
    "e.g", "i.e", "etc", "no", "nos", "art", "arts", "p", "pp", "cf",
    "para", "vol", "mr", "mrs", "dr", "op"};

constexpr std::array<std::string_view, 10> kRoman = {
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};

bool is_abbreviation_before(std::string_view s, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && (text::is_alpha(s[b - 1]) || s[b - 1] == '.')) --b;
  if (b == dot) return false;
  std::string word = text::to_lower(s.substr(b, dot - b));
  for (auto abbr : kAbbreviations) {
    if (word == abbr) return true;
  }
  return false;
}

// True when the character at `pos` ends a sentence. Parenthesis depth is
// tracked by the caller.
bool is_terminator_at(std::string_view s, std::size_t pos) {
  char c = s[pos];
  if (c != '.' && c != '?' && c != '!') return false;
  if (pos + 1 < s.size() && !text::is_space(s[pos + 1])) return false;
  if (c == '.' && is_abbreviation_before(s, pos)) return false;
  std::size_t next = pos + 1;
  while (next < s.size() && text::is_space(s[next])) ++next;
  if (next < s.size() && text::is_lower(s[next])) return false;
  return true;
}

std::vector<std::size_t> terminator_positions(std::string_view s) {
  std::vector<std::size_t> out;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      if (depth > 0) --depth;
    } else if (depth == 0 && is_terminator_at(s, i)) {
      out.push_back(i);
    }
  }
  return out;
}

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && text::is_space(s[i])) ++i;
  return i;
}

bool label_at(std::string_view s, std::size_t i, std::string_view label) {
  return i + label.size() + 2 <= s.size() && s[i] == '(' &&
         s.substr(i + 1, label.size()) == label && s[i + 1 + label.size()] == ')';
}

std::string next_label(std::string_view label, bool roman) {
  if (roman) {
    for (std::size_t k = 0; k + 1 < kRoman.size(); ++k) {
      if (kRoman[k] == label) return std::string(kRoman[k + 1]);
    }
    return {};
  }
  if (label.size() == 1 && label[0] >= 'a' && label[0] < 'z') {
    return std::string(1, static_cast<char>(label[0] + 1));
  }
  return {};
}

// Position of the colon that introduces an enumeration, or npos.
std::size_t find_enumeration_colon(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      if (depth > 0) --depth;
    } else if (s[i] == ':' && depth == 0) {
      std::size_t j = skip_space(s, i + 1);
      if (label_at(s, j, "a") || label_at(s, j, "i")) return i;
    }
  }
  return std::string_view::npos;
}

std::string_view strip_item_tail(std::string_view body) {
  body = text::trim(body);
  bool changed = true;
  while (changed && !body.empty()) {
    changed = false;
    char last = body.back();
    if (last == ';' || last == ',' || last == '.') {
      body.remove_suffix(1);
      body = text::trim(body);
      changed = true;
    }
  }
  return body;
}

void append_passthrough(std::vector<Sentence>& out, std::string_view whole,
                        std::size_t begin, std::size_t end) {
  std::string_view piece = whole.substr(begin, end - begin);
  std::string_view trimmed = text::trim(piece);
  if (trimmed.empty()) return;
  Sentence s;
  std::size_t lead = static_cast<std::size_t>(trimmed.data() - piece.data());
  s.span = {begin + lead, begin + lead + trimmed.size()};
  s.text = std::string(trimmed);
  out.push_back(std::move(s));
}

}  // namespace

std::string Item::row_id(const Sentence& s) const {
  if (sentences.size() <= 1) return label;
  return label + "." + std::to_string(s.index_in_item);
}

ArticleRange parse_article_range(std::string_view spec) {
  auto parse_int = [&](std::string_view part) {
    part = text::trim(part);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value <= 0) {
      throw Error(ErrorCode::kInvalidInput,
                  "bad article range '" + std::string(spec) + "'");
    }
    return value;
  };
  std::size_t sep = spec.find("..");
  std::size_t sep_len = 2;
  if (sep == std::string_view::npos) {
    sep = spec.find('-');
    sep_len = 1;
  }
  ArticleRange range;
  if (sep == std::string_view::npos) {
    range.low = range.high = parse_int(spec);
  } else {
    range.low = parse_int(spec.substr(0, sep));
    range.high = parse_int(spec.substr(sep + sep_len));
  }
  if (range.low > range.high) {
    throw Error(ErrorCode::kInvalidInput,
                "article range low > high in '" + std::string(spec) + "'");
  }
  return range;
}

std::vector<Sentence> segment_sentences(std::string_view item_text) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t b, std::size_t e, bool add_stop) {
    std::string_view piece = item_text.substr(b, e - b);
    std::string_view trimmed = text::trim(piece);
    bool has_word = false;
    for (char c : trimmed) has_word = has_word || text::is_alpha(c);
    if (!has_word) return;
    Sentence s;
    std::size_t lead = static_cast<std::size_t>(trimmed.data() - piece.data());
    s.span = {b + lead, b + lead + trimmed.size()};
    s.text = text::collapse_whitespace(trimmed);
    if (add_stop) {
      while (!s.text.empty() && (s.text.back() == ',' || s.text.back() == ';' ||
                                 s.text.back() == ':')) {
        s.text.pop_back();
      }
      s.text.push_back('.');
    }
    s.index_in_item = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(s));
  };
  for (std::size_t pos : terminator_positions(item_text)) {
    emit(start, pos + 1, false);
    start = pos + 1;
  }
  if (start < item_text.size()) emit(start, item_text.size(), true);
  return out;
}

std::vector<Sentence> expand_items(std::string_view item_text) {
  std::vector<Sentence> out;
  if (text::trim(item_text).empty()) return out;

  std::size_t colon = find_enumeration_colon(item_text);
  if (colon == std::string_view::npos) {
    append_passthrough(out, item_text, 0, item_text.size());
    return out;
  }

  // The stem is the sentence fragment just before the colon.
  std::size_t stem_begin = 0;
  for (std::size_t pos : terminator_positions(item_text.substr(0, colon))) {
    stem_begin = pos + 1;
  }
  append_passthrough(out, item_text, 0, stem_begin);
  std::string stem =
      text::collapse_whitespace(item_text.substr(stem_begin, colon - stem_begin));

  std::size_t label_pos = skip_space(item_text, colon + 1);
  bool roman = !label_at(item_text, label_pos, "a");
  std::string label = roman ? "i" : "a";
  std::size_t rest_begin = item_text.size();

  while (!label.empty()) {
    std::size_t body_begin = label_pos + label.size() + 2;
    std::string next = next_label(label, roman);
    std::size_t body_end = item_text.size();
    std::size_t next_label_pos = std::string_view::npos;
    bool last = true;
    int depth = 0;
    for (std::size_t i = body_begin; i < item_text.size(); ++i) {
      char c = item_text[i];
      if (c == '(') {
        // A nested list's labels live inside the body; only the expected
        // top-level successor after a ';' ends this item.
        ++depth;
        continue;
      }
      if (c == ')') {
        if (depth > 0) --depth;
        continue;
      }
      if (depth != 0) continue;
      if (c == ';' && !next.empty()) {
        std::size_t j = skip_space(item_text, i + 1);
        for (std::string_view conj : {"and", "or"}) {
          if (item_text.substr(j, conj.size()) == conj &&
              j + conj.size() < item_text.size() &&
              text::is_space(item_text[j + conj.size()])) {
            j = skip_space(item_text, j + conj.size());
            break;
          }
        }
        if (label_at(item_text, j, next)) {
          body_end = i;
          next_label_pos = j;
          last = false;
          break;
        }
      }
      if (is_terminator_at(item_text, i)) {
        body_end = i;
        break;
      }
    }

    std::string_view body =
        strip_item_tail(item_text.substr(body_begin, body_end - body_begin));
    if (!body.empty()) {
      Sentence s;
      s.text = stem + " " + text::collapse_whitespace(body) + ".";
      s.synthesized = true;
      s.list_label = label;
      s.span = {label_pos, body_end};
      // A nested enumeration inside the body expands again under the same
      // stem; labels compose as "a.i".
      std::vector<Sentence> nested = expand_items(s.text);
      if (nested.size() > 1 || (nested.size() == 1 && nested[0].synthesized)) {
        for (Sentence& n : nested) {
          n.synthesized = true;
          n.list_label = label + (n.list_label ? "." + *n.list_label : "");
          n.span = s.span;
          out.push_back(std::move(n));
        }
      } else {
        out.push_back(std::move(s));
      }
    }
    if (last) {
      rest_begin = body_end < item_text.size() ? body_end + 1 : body_end;
      break;
    }
    label_pos = next_label_pos;
    label = next;
  }
  append_passthrough(out, item_text, rest_begin, item_text.size());
  return out;
}

namespace {

struct Line {
  std::size_t begin;
  std::size_t end;  // excluding newline
};

std::vector<Line> split_lines(std::string_view s) {
  std::vector<Line> lines;
  std::size_t b = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n') {
      std::size_t e = i;
      if (e > b && s[e - 1] == '\r') --e;
      lines.push_back({b, e});
      b = i + 1;
    }
  }
  return lines;
}

// Returns the heading number for an "Article N" line, 0 if the line is not a
// heading. Throws on "Article X" where X is not a positive integer.
int heading_number(std::string_view line, std::size_t line_no) {
  std::vector<std::string> words = text::split_words(line);
  if (words.size() != 2 || words[0] != "Article") return 0;
  const std::string& num = words[1];
  if (num.find('(') != std::string::npos) return 0;  // citation, e.g. 47(1)
  int value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size() || value <= 0) {
    throw Error(ErrorCode::kMalformedHeading,
                "line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
  }
  return value;
}

// "5. Member States ..." -> label "5", body offset after the marker.
bool item_marker(std::string_view line, std::string& label, std::size_t& body) {
  std::size_t i = 0;
  while (i < line.size() && text::is_space(line[i])) ++i;
  std::size_t d = i;
  while (d < line.size() && text::is_digit(line[d])) ++d;
  if (d == i || d >= line.size() || line[d] != '.') return false;
  if (d + 1 < line.size() && !text::is_space(line[d + 1])) return false;
  label = std::string(line.substr(i, d - i));
  body = skip_space(line, d + 1);
  return true;
}

bool ends_with_terminal_punct(std::string_view line) {
  line = text::trim(line);
  if (line.empty()) return false;
  char c = line.back();
  return c == '.' || c == ':' || c == ';' || c == ',';
}

void build_sentences(std::string_view source, Item& item) {
  std::string_view body = source.substr(item.span.begin, item.span.size());
  for (Sentence& piece : expand_items(body)) {
    if (piece.synthesized) {
      piece.span.begin += item.span.begin;
      piece.span.end += item.span.begin;
      item.sentences.push_back(std::move(piece));
      continue;
    }
    std::string_view raw = body.substr(piece.span.begin, piece.span.size());
    for (Sentence& s : segment_sentences(raw)) {
      s.span.begin += item.span.begin + piece.span.begin;
      s.span.end += item.span.begin + piece.span.begin;
      item.sentences.push_back(std::move(s));
    }
  }
  for (std::size_t k = 0; k < item.sentences.size(); ++k) {
    item.sentences[k].index_in_item = static_cast<int>(k) + 1;
  }
}

}  // namespace

DirectiveDocument parse_directive(std::string_view source, ArticleRange range,
                                  std::string source_name) {
  if (range.low <= 0 || range.low > range.high) {
    throw Error(ErrorCode::kInvalidInput, "invalid article range");
  }
  std::vector<Line> lines = split_lines(source);

  struct Heading {
    int number;
    std::size_t line;
  };
  std::vector<Heading> headings;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    std::string_view line = source.substr(lines[k].begin, lines[k].end - lines[k].begin);
    int n = heading_number(line, k + 1);
    if (n == 0) continue;
    if (!headings.empty() && n <= headings.back().number) {
      throw Error(ErrorCode::kMalformedHeading,
                  "line " + std::to_string(k + 1) + ": Article " + std::to_string(n) +
                      " does not follow Article " +
                      std::to_string(headings.back().number));
    }
    headings.push_back({n, k});
  }
  if (headings.empty()) {
    throw Error(ErrorCode::kNoArticlesFound,
                "no 'Article N' heading in " +
                    (source_name.empty() ? std::string("input") : source_name));
  }

  DirectiveDocument doc;
  doc.source_name = std::move(source_name);
  for (std::size_t h = 0; h < headings.size(); ++h) {
    if (!range.contains(headings[h].number)) continue;
    std::size_t first = headings[h].line + 1;
    std::size_t last = h + 1 < headings.size() ? headings[h + 1].line : lines.size();

    Article article;
    article.number = headings[h].number;
    bool has_numbered = false;
    for (std::size_t k = first; k < last; ++k) {
      std::string label;
      std::size_t body = 0;
      std::string_view line =
          source.substr(lines[k].begin, lines[k].end - lines[k].begin);
      if (item_marker(line, label, body)) has_numbered = true;
    }

    bool seen_content = false;
    for (std::size_t k = first; k < last; ++k) {
      std::string_view line =
          source.substr(lines[k].begin, lines[k].end - lines[k].begin);
      if (text::trim(line).empty()) continue;
      std::string label;
      std::size_t body = 0;
      if (item_marker(line, label, body)) {
        for (const Item& existing : article.items) {
          if (existing.label == label) {
            throw Error(ErrorCode::kDuplicateItem,
                        "line " + std::to_string(k + 1) + ": item " + label +
                            " repeated in Article " + std::to_string(article.number));
          }
        }
        Item item;
        item.label = label;
        item.span = {lines[k].begin + body, lines[k].end};
        article.items.push_back(std::move(item));
        seen_content = true;
        continue;
      }
      if (!seen_content && article.title.empty() && !ends_with_terminal_punct(line)) {
        article.title = std::string(text::trim(line));
        seen_content = true;
        continue;
      }
      seen_content = true;
      if (article.items.empty()) {
        Item item;
        item.label = has_numbered ? "0" : "1";
        std::size_t lead = skip_space(line, 0);
        item.span = {lines[k].begin + lead, lines[k].end};
        article.items.push_back(std::move(item));
      } else {
        article.items.back().span.end = lines[k].end;
      }
    }
    for (Item& item : article.items) build_sentences(source, item);
    std::erase_if(article.items, [](const Item& i) { return i.sentences.empty(); });
    doc.articles.push_back(std::move(article));
  }
  return doc;
}

}  // namespace nisonto::ingest
