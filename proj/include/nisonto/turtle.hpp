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

#ifndef NISONTO_TURTLE_HPP_
#define NISONTO_TURTLE_HPP_

#include <string>
#include <string_view>

#include "nisonto/rdf.hpp"

namespace nisonto::rdf {

// Deterministic Turtle. Prefixes for the graph namespace (as "ns"), owl,
// rdf and rdfs; namespace IRIs are written in full. Subjects are sorted by
// IRI, rdf:type comes first as "a", blank nodes are nested as [ ... ] at
// their only use and well-formed collections are written as ( ... ).
// Throws kCyclicBlankNodes when a blank node is shared or on a cycle.
std::string serialize_turtle(const Graph& g);

// Reads the subset written by serialize_turtle plus "_:" labels, literals,
// PREFIX/@prefix/@base and comments. The graph namespace is taken from the
// "ns" (or empty) prefix when declared. Throws kSyntaxError with line and
// column.
Graph parse_turtle(std::string_view text);

}  // namespace nisonto::rdf

#endif  // NISONTO_TURTLE_HPP_
