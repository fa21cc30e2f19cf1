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

#ifndef NISONTO_TESTS_WORKED_EXAMPLES_HPP_
#define NISONTO_TESTS_WORKED_EXAMPLES_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace nisonto::testing {

inline constexpr std::string_view kArticle8Item5 =
    "5. Member States shall ensure that their competent authorities and single points of contact "
    "have adequate resources to carry out, in an effective and efficient manner, the tasks "
    "assigned to them and thereby fulfil the objectives of this Directive.";

// Keeps the line break and the missing final full stop.
inline constexpr std::string_view kArticle14Item3 =
    "3. The Cooperation Group shall be composed of representatives of Member States, the "
    "Commission and ENISA. The European External Action Service shall participate in the "
    "activities of the Cooperation Group as an observer. The European Supervisory Authorities \n"
    "(ESAs) and the competent authorities under Regulation (EU) 2022/2554 may participate in the "
    "activities of the Cooperation Group in accordance with Article 47(1) of that Regulation";

inline constexpr std::string_view kArticle8Item5Sentence =
    "Member States shall ensure that their competent authorities and single points of contact "
    "have adequate resources to carry out, in an effective and efficient manner, the tasks "
    "assigned to them and thereby fulfil the objectives of this Directive.";

inline constexpr std::string_view kEeasSentence =
    "The European External Action Service shall participate in the activities of the "
    "Cooperation Group as an observer.";

// One cell of the reference POS tables: gold value, extracted ("I-") value
// and the printed mark ("OK", "X", "PART", or "-" for not applicable).
struct TableCell {
  int article;
  std::string row;
  std::string slot;
  std::string gold;
  std::string extracted;
  std::string mark;
};

inline const std::vector<TableCell>& reference_cells() {
  static const std::vector<TableCell> kCells = {
      {8, "1", "subject", "MS", "MS", "OK"},
      {8, "1", "verb", "designate", "designate", "OK"},
      {8, "1", "object",
       "one or more competent authorities responsible for cybersecurity and for the supervisory "
       "tasks referred to in Chapter VII (competent authorities)",
       "one or more competent authorities responsible for cybersecurity", "PART"},
      {8, "2", "subject", "CA", "CA", "OK"},
      {8, "2", "verb", "monitor", "referred", "X"},
      {8, "2", "object", "the implementation of this Directive at national level",
       "the implementation of this Directive at national level ", "PART"},
      {8, "3.1", "subject", "MS", "MS", "OK"},
      {8, "3.1", "verb", "designate", "designate", "OK"},
      {8, "3.1", "object", "a  single  point  of  contact", "a single point of contact", "PART"},
      {8, "3.2", "subject", "CA", "CA", "OK"},
      {8, "3.2", "verb", "be", "be", "OK"},
      {8, "3.2", "object",
       "that competent authority shall also be the single point of contact for that Member State",
       "only one competent authority", "X"},
      {8, "5", "subject", "MS", "MS", "OK"},
      {8, "5", "verb", "ensure", "ensure", "OK"},
      {8, "5", "object",
       "that  their  competent  authorities  and  single  points  of  contact  have  adequate  "
       "resources  to carry  out,  in  an  effective  and  efficient  manner",
       "a) that  their  competent  authorities  and  single  points  of  contact  have  adequate  "
       "resources  to carry  out,  in  an  effective  and  efficient  manner | b)adequate resources",
       "OK"},
      {8, "6.1", "subject", "MS", "MS", "OK"},
      {8, "6.1", "verb", "notify", "notify", "OK"},
      {8, "6.1", "object",
       "the  Commission  without  undue  delay  of  the  identity  of  the  competent  authority "
       "referred  to  in  paragraph  1  and  of  the  single  point  of  contact  referred  to  in  "
       "paragraph  3, of  the  tasks  of  those  authorities, and  of  any  subsequent  changes  "
       "thereto",
       "the commission", "PART"},
      {14, "1", "subject", "-", "-", "-"},
      {14, "1", "verb", "P", "P", "-"},
      {14, "1", "object", "PASSIVE - NONE", "PASSIVE - NONE", "X"},
      {14, "2", "subject", "CG", "CG", "OK"},
      {14, "2", "verb", "carry", "carry", "OK"},
      {14, "2", "object",
       "its tasks on the basis of biennial work programmes referred to in paragraph 7",
       "its tasks on the basis of biennial work programmes referred to in paragraph 7", "OK"},
      {14, "3.1", "subject", "CG", "CG", "OK"},
      {14, "3.1", "verb", "P - composed", "P - composed", "OK"},
      {14, "3.1", "object", "of representatives of Member States, the Commission and ENISA", "NONE",
       "X"},
      {14, "3.2", "subject", "EEAS", "EEAS", "OK"},
      {14, "3.2", "verb", "participate", "participate", "OK"},
      {14, "3.2", "object", "in the activities of the Cooperation Group as an observer", "NONE", "X"},
      {14, "3.3", "subject", "ESA - CA", "ESA", "PART"},
      {14, "3.3", "verb", "participate", "participate", "OK"},
      {14, "3.3", "object",
       "in the activities of the Cooperation Group in accordance with Article 47(1) of that "
       "Regulation.",
       "NONE", "X"},
      {14, "7", "subject", "CG", "CG", "OK"},
      {14, "7", "verb", "establish", "establish", "OK"},
      {14, "7", "object",
       "a work programme in respect of actions to be undertaken to implement its objectives and tasks",
       "a work programme in respect of actions to be undertaken to implement its objectives and tasks",
       "OK"},
  };
  return kCells;
}

}  // namespace nisonto::testing

#endif  // NISONTO_TESTS_WORKED_EXAMPLES_HPP_
