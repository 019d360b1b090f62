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

#ifndef CORESHRINK_WCNF_PARSER_H
#define CORESHRINK_WCNF_PARSER_H

#include "Instance.h"

#include <string>

namespace coreshrink {

// "p wcnf <vars> <clauses> <top>" followed by weighted clauses. Each
// variable v becomes atom x<v> with a free choice rule. A clause of weight
// top is hard and becomes an integrity constraint over the complements of
// its literals; any other weight w in [1..top-1] yields a weak constraint
// w@1 over the same complements.
ParsedInstance parseWcnf(const std::string& text);

/// True when the text carries a DIMACS cnf/wcnf header.
bool looksLikeWcnf(const std::string& text);

} // namespace coreshrink

#endif
