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

#include "coreshrink/Relaxation.h"

namespace coreshrink {

RelaxationOutput relaxLevel(const WeakConstraintSet& weak, int level, Program& program, SoftRegistry& registry) {
    std::vector<size_t> indices = weak.indicesAtLevel(level);
    if (indices.empty()) throw StructuralError("no weak constraints at level " + std::to_string(level));

    RelaxationOutput out;
    for (size_t idx : indices) {
        const WeakConstraint& w = weak.items[idx];
        int soft = registry.registerSoft(program, w.weight, true, static_cast<int64_t>(idx));
        out.softAtoms.push_back(soft);

        std::vector<BodyElement> body = w.body;
        body.push_back(Literal{soft, 0});
        out.addedRules.push_back(Rule::constraint(std::move(body)));
        out.addedRules.push_back(Rule::choice(soft));
    }
    for (const auto& r : out.addedRules) program.add(r);
    return out;
}

RelaxationOutput relaxCore(const AssumptionSet& core, int64_t stratum, Program& program, SoftRegistry& registry) {
    assert(!core.empty() && stratum >= 1);
    const int n = static_cast<int>(core.size()) - 1;

    RelaxationOutput out;
    out.lbIncrement = stratum;

    for (int a : core.atoms) {
        int64_t w = registry.weight(a);
        if (w < stratum) throw StructuralError("core atom weighs less than the stratum");
        registry.setWeight(a, w - stratum);
    }

    int64_t relaxationId = registry.nextRelaxationId();
    for (int i = 0; i < n; i++)
        out.softAtoms.push_back(registry.registerSoft(program, stratum, false, relaxationId));

    for (int s : out.softAtoms) out.addedRules.push_back(Rule::choice(s));
    for (int i = 0; i + 1 < n; i++)
        out.addedRules.push_back(Rule::constraint({Literal{out.softAtoms[i], 0}, Literal{out.softAtoms[i + 1], 1}}));

    // count{ p_0, ..., p_n, not s_1, ..., not s_n } < n
    Aggregate count;
    count.rel = Rel::Lt;
    count.bound = n;
    for (int a : core.atoms) count.elements.push_back({1, Literal{a, 0}});
    for (int s : out.softAtoms) count.elements.push_back({1, Literal{s, 1}});
    out.addedRules.push_back(Rule::constraint({std::move(count)}));

    for (const auto& r : out.addedRules) program.add(r);
    return out;
}

WeakConstraintSet compileLevels(const WeakConstraintSet& weak) {
    WeakConstraintSet out = weak;
    for (;;) {
        int64_t base = 1;
        int lowest = 0;
        for (const auto& w : out.items) {
            if (w.level == 1) base += w.weight;
            else if (lowest == 0 || w.level < lowest) lowest = w.level;
        }
        if (lowest == 0) return out;
        for (auto& w : out.items) {
            if (w.level != lowest) continue;
            if (base != 0 && w.weight > INT64_MAX / base)
                throw ArithmeticError("weight overflow while compiling levels");
            w.weight *= base;
            w.level = 1;
        }
    }
}

} // namespace coreshrink
