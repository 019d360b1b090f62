/*
 *  Copyright (C) 2026  The coreshrink authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef CORESHRINK_ASP_PARSER_H
#define CORESHRINK_ASP_PARSER_H

#include "Instance.h"

#include <string>

namespace coreshrink {

// Ground dialect, one statement per ".":
//
//   a | c :- not b, not d.          disjunctive rule
//   a.                              fact
//   :- a, b.                        integrity constraint
//   :~ d. [1@2]                     weak constraint, weight 1 at level 2
//   :- sum{ 2: not s2, 1: s4 } >= 2.
//   :- count{ s2, s3, not s5 } < 1.
//   % comment to end of line
//
// Atom names match [a-zA-Z_][a-zA-Z0-9_]*; "_false" is the false constant.
ParsedInstance parseGroundAsp(const std::string& text);

/// Text that parses back to a structurally equal instance, modulo atom-id
/// renumbering. Atom names are written verbatim.
std::string serializeProgram(const ParsedInstance& instance);

std::string bodyText(const AtomTable& atoms, const std::vector<BodyElement>& body);

} // namespace coreshrink

#endif
