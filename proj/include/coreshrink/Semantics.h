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

#ifndef CORESHRINK_SEMANTICS_H
#define CORESHRINK_SEMANTICS_H

#include "Program.h"
#include "WeakConstraints.h"

namespace coreshrink {

/// Truth of a literal under default negation: depth 0 is membership,
/// depth 1 its complement, depth 2 membership again.
/// Throws StructuralError if the atom is not registered in `atoms`.
bool evalLiteral(const AtomTable& atoms, const Interpretation& I, const Literal& lit);

/// Unchecked variant for inner loops.
inline bool evalLiteralFast(const Interpretation& I, const Literal& lit) {
    bool member = I.contains(lit.atom);
    return lit.depth == 1 ? !member : member;
}

bool evalAggregate(const Interpretation& I, const Aggregate& agg);

bool evalBody(const Interpretation& I, const std::vector<BodyElement>& body);

/// I satisfies r when the head intersects I whenever the body holds.
bool satisfiesRule(const Interpretation& I, const Rule& r);
bool satisfiesProgram(const Interpretation& I, const Program& program);

/// Rules with unsatisfied bodies are dropped; satisfied negated literals
/// become the top shortcut, unsatisfied ones become the false constant.
/// Positive literals and aggregates are kept verbatim.
Program reduct(const Program& program, const Interpretation& I);

/// Reference stability test: I models the program and no proper subset of I
/// models the reduct. Subset search, guarded at 25 true atoms.
bool isStable(const Program& program, const Interpretation& I);

/// Sum of the weights of the level-l weak constraints whose bodies I satisfies.
int64_t cost(const WeakConstraintSet& weak, int level, const Interpretation& I);

/// Costs of I at every level occurring in `weak`.
CostVector costVector(const WeakConstraintSet& weak, const Interpretation& I);

/// The strict order on interpretations induced by the lexicographic
/// comparison of their cost vectors, higher levels first.
bool precedes(const Interpretation& J, const Interpretation& I, const WeakConstraintSet& weak);

} // namespace coreshrink

#endif
