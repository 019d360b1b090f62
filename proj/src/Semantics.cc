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

#include "coreshrink/Semantics.h"

namespace coreshrink {

const char* relText(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
        case Rel::Eq: return "=";
        case Rel::Ne: return "!=";
    }
    return "?";
}

bool evalLiteral(const AtomTable& atoms, const Interpretation& I, const Literal& lit) {
    if (!atoms.contains(lit.atom)) throw StructuralError("literal references unknown atom id " + std::to_string(lit.atom));
    return evalLiteralFast(I, lit);
}

static bool compare(int64_t sum, Rel rel, int64_t bound) {
    switch (rel) {
        case Rel::Lt: return sum < bound;
        case Rel::Le: return sum <= bound;
        case Rel::Ge: return sum >= bound;
        case Rel::Gt: return sum > bound;
        case Rel::Eq: return sum == bound;
        case Rel::Ne: return sum != bound;
    }
    return false;
}

bool evalAggregate(const Interpretation& I, const Aggregate& agg) {
    int64_t sum = 0;
    for (const auto& e : agg.elements)
        if (evalLiteralFast(I, e.lit)) sum += e.weight;
    return compare(sum, agg.rel, agg.bound);
}

bool evalBody(const Interpretation& I, const std::vector<BodyElement>& body) {
    for (const auto& e : body) {
        if (isLiteral(e)) {
            if (!evalLiteralFast(I, asLiteral(e))) return false;
        } else if (!evalAggregate(I, asAggregate(e))) {
            return false;
        }
    }
    return true;
}

bool satisfiesRule(const Interpretation& I, const Rule& r) {
    if (!evalBody(I, r.body)) return true;
    for (int a : r.head)
        if (a != AtomTable::kFalse && I.contains(a)) return true;
    return false;
}

bool satisfiesProgram(const Interpretation& I, const Program& program) {
    for (const auto& r : program.rules)
        if (!satisfiesRule(I, r)) return false;
    return true;
}

Program reduct(const Program& program, const Interpretation& I) {
    Program out;
    out.atoms = program.atoms;
    for (const auto& r : program.rules) {
        if (!evalBody(I, r.body)) continue;
        Rule kept;
        kept.head = r.head;
        for (const auto& e : r.body) {
            if (isLiteral(e) && asLiteral(e).negated()) {
                // The body holds in I, so every negated literal is satisfied.
                kept.body.push_back(topLiteral());
            } else {
                kept.body.push_back(e);
            }
        }
        out.rules.push_back(std::move(kept));
    }
    return out;
}

bool isStable(const Program& program, const Interpretation& I) {
    if (!satisfiesProgram(I, program)) return false;
    if (I.size() > 25) throw CapacityError("stability subset search capped at 25 true atoms");

    Program red = reduct(program, I);
    const std::vector<int>& atoms = I.atoms();
    const size_t n = atoms.size();
    const uint64_t full = n == 0 ? 0 : ((uint64_t{1} << n) - 1);

    for (uint64_t mask = 0; mask < full; mask++) {
        Interpretation J;
        for (size_t i = 0; i < n; i++)
            if (mask & (uint64_t{1} << i)) J.insert(atoms[i]);
        bool models = true;
        for (const auto& r : red.rules) {
            if (!satisfiesRule(J, r)) { models = false; break; }
        }
        if (models) return false;
    }
    return true;
}

int64_t cost(const WeakConstraintSet& weak, int level, const Interpretation& I) {
    int64_t total = 0;
    for (const auto& w : weak.items)
        if (w.level == level && evalBody(I, w.body)) total += w.weight;
    return total;
}

CostVector costVector(const WeakConstraintSet& weak, const Interpretation& I) {
    CostVector cv;
    for (int l : weak.levelsDescending()) cv.set(l, cost(weak, l, I));
    return cv;
}

bool precedes(const Interpretation& J, const Interpretation& I, const WeakConstraintSet& weak) {
    return costVector(weak, J).precedes(costVector(weak, I));
}

} // namespace coreshrink
