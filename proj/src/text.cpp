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

#include "nisonto/text.hpp"

#include "nisonto/error.hpp"

namespace nisonto {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoArticlesFound: return "NoArticlesFound";
    case ErrorCode::kMalformedHeading: return "MalformedHeading";
    case ErrorCode::kDuplicateItem: return "DuplicateItem";
    case ErrorCode::kNoVerbFound: return "NoVerbFound";
    case ErrorCode::kUnextractable: return "Unextractable";
    case ErrorCode::kEmptyTail: return "EmptyTail";
    case ErrorCode::kDuplicateRow: return "DuplicateRow";
    case ErrorCode::kUnknownEntity: return "UnknownEntity";
    case ErrorCode::kEmptyPredicate: return "EmptyPredicate";
    case ErrorCode::kEmptyObjectName: return "EmptyObjectName";
    case ErrorCode::kEmptyMeasures: return "EmptyMeasures";
    case ErrorCode::kCyclicBlankNodes: return "CyclicBlankNodes";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownClass: return "UnknownClass";
    case ErrorCode::kUnknownIndividual: return "UnknownIndividual";
    case ErrorCode::kInvalidAbox: return "InvalidAbox";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kStageInputMissing: return "StageInputMissing";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

namespace text {

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) words.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = is_upper(a[i]) ? static_cast<char>(a[i] - 'A' + 'a') : a[i];
    char y = is_upper(b[i]) ? static_cast<char>(b[i] - 'A' + 'a') : b[i];
    if (x != y) return false;
  }
  return true;
}

std::string capitalize(std::string_view word) {
  std::string out(word);
  if (!out.empty() && is_lower(out[0])) {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

}  // namespace text
}  // namespace nisonto
