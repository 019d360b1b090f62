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

#include "coreshrink/EnumOracle.h"

#include "coreshrink/Semantics.h"

#include <chrono>

namespace coreshrink {

namespace {
double nowSeconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}
} // namespace

EnumOracle::EnumOracle(const Program& base, CoreMode coreMode, int atomCap)
    : atoms_(base.atoms), rules_(base.rules), coreMode_(coreMode), atomCap_(atomCap) {
    assert(atomCap_ >= 1 && atomCap_ <= 62);
}

void EnumOracle::addRule(const Rule& r) {
    for (int a : r.head)
        if (!atoms_.contains(a)) throw StructuralError("rule head references unknown atom");
    rules_.push_back(r);
    dirty_ = true;
}

void EnumOracle::compile() {
    compiled_.clear();
    compiled_.reserve(rules_.size());
    for (const auto& r : rules_) {
        CompiledRule c{0, 0, 0, 0, {}, r.isConstraint()};
        bool neverFires = false;
        for (const auto& e : r.body) {
            if (!isLiteral(e)) {
                c.aggregates.push_back(&asAggregate(e));
                continue;
            }
            const Literal& lit = asLiteral(e);
            if (lit.atom == AtomTable::kFalse) {
                if (lit.depth == 1) continue; // the top shortcut
                neverFires = true;            // a body mentioning the false constant positively
                break;
            }
            uint64_t bit = uint64_t{1} << (lit.atom - 1);
            if (lit.depth == 1) c.negMask |= bit;
            else {
                c.posMask |= bit;
                if (lit.depth == 0) c.reductPosMask |= bit;
            }
        }
        if (neverFires) continue;
        for (int a : r.head)
            if (a != AtomTable::kFalse) c.headMask |= uint64_t{1} << (a - 1);
        compiled_.push_back(std::move(c));
    }
    dirty_ = false;
}

bool EnumOracle::aggregateHolds(const Aggregate& agg, uint64_t mask) const {
    int64_t sum = 0;
    for (const auto& e : agg.elements) {
        bool member = e.lit.atom != AtomTable::kFalse && (mask >> (e.lit.atom - 1)) & 1;
        bool sat = e.lit.depth == 1 ? !member : member;
        if (sat) sum += e.weight;
    }
    switch (agg.rel) {
        case Rel::Lt: return sum < agg.bound;
        case Rel::Le: return sum <= agg.bound;
        case Rel::Ge: return sum >= agg.bound;
        case Rel::Gt: return sum > agg.bound;
        case Rel::Eq: return sum == agg.bound;
        case Rel::Ne: return sum != agg.bound;
    }
    return false;
}

bool EnumOracle::classicalModel(uint64_t mask) const {
    for (const auto& c : compiled_) {
        if ((c.posMask & ~mask) != 0 || (c.negMask & mask) != 0) continue;
        bool bodyHolds = true;
        for (const Aggregate* agg : c.aggregates)
            if (!aggregateHolds(*agg, mask)) { bodyHolds = false; break; }
        if (bodyHolds && (c.headMask & mask) == 0) return false;
    }
    return true;
}

bool EnumOracle::stableCandidate(uint64_t mask) const {
    if (mask == 0) return true;
    // Proper subsets of the candidate against the reduct.
    for (uint64_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
        bool models = true;
        for (const auto& c : compiled_) {
            if ((c.posMask & ~mask) != 0 || (c.negMask & mask) != 0) continue;
            bool inReduct = true;
            for (const Aggregate* agg : c.aggregates)
                if (!aggregateHolds(*agg, mask)) { inReduct = false; break; }
            if (!inReduct) continue;
            assert(c.headMask != 0); // violated constraints never reach the stability test
            if ((c.reductPosMask & ~sub) != 0) continue;
            bool bodyHolds = true;
            for (const Aggregate* agg : c.aggregates)
                if (!aggregateHolds(*agg, sub)) { bodyHolds = false; break; }
            if (bodyHolds && (c.headMask & sub) == 0) { models = false; break; }
        }
        if (models) return false;
        if (sub == 0) break;
    }
    return true;
}

Interpretation EnumOracle::toInterpretation(uint64_t mask) const {
    Interpretation I;
    for (int a = 1; a < atoms_.size(); a++)
        if ((mask >> (a - 1)) & 1) I.insert(a);
    return I;
}

EnumOracle::ScanResult EnumOracle::scan(uint64_t required, int64_t maxSteps, double deadline) {
    if (dirty_) compile();
    const int n = atoms_.size() - 1;
    std::vector<int> idx;
    for (int k = 0; k <= n; k++) {
        idx.resize(k);
        for (int i = 0; i < k; i++) idx[i] = i;
        for (;;) {
            uint64_t mask = 0;
            for (int i : idx) mask |= uint64_t{1} << i;
            if ((required & ~mask) == 0) {
                if (maxSteps >= 0 && steps_ >= maxSteps) return {false, std::nullopt};
                steps_++;
                if (deadline > 0 && (steps_ & 511) == 0 && nowSeconds() > deadline)
                    return {false, std::nullopt};
                if (classicalModel(mask) && stableCandidate(mask)) return {true, mask};
            }
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) i--;
            if (i < 0) break;
            idx[i]++;
            for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
        }
    }
    return {true, std::nullopt};
}

OracleVerdict EnumOracle::solveImpl(const AssumptionSet& assumptions, int64_t maxSteps, double deadline) {
    if (atoms_.size() - 1 > atomCap_)
        throw CapacityError("enumeration oracle capped at " + std::to_string(atomCap_) + " atoms");
    steps_ = 0;
    uint64_t required = 0;
    for (int a : assumptions.atoms) {
        if (!atoms_.contains(a) || a == AtomTable::kFalse)
            throw StructuralError("assumption references an invalid atom");
        required |= uint64_t{1} << (a - 1);
    }

    ScanResult res = scan(required, maxSteps, deadline);
    if (!res.exhausted) {
        lastEffort_ = steps_;
        OracleVerdict v = OracleVerdict::unknown();
        v.effort = steps_;
        return v;
    }
    if (res.model) {
        lastEffort_ = steps_;
        OracleVerdict v = OracleVerdict::coherent(toInterpretation(*res.model));
        v.effort = steps_;
        return v;
    }

    AssumptionSet core = assumptions;
    if (coreMode_ == CoreMode::Raw && !core.empty()) {
        // raw cores echo the assumptions, except that an incoherent
        // program on its own yields the empty core; the check runs outside
        // the budgeted effort
        int64_t mainScanSteps = steps_;
        ScanResult bare = scan(0, -1, 0);
        assert(bare.exhausted);
        if (!bare.model) core.atoms.clear();
        steps_ = mainScanSteps;
    }
    if (coreMode_ == CoreMode::Minimal) {
        // Deletion-based minimization; each drop is kept only when the
        // remainder is still jointly unsatisfiable.
        size_t i = 0;
        while (i < core.atoms.size()) {
            AssumptionSet trial;
            for (size_t j = 0; j < core.atoms.size(); j++)
                if (j != i) trial.atoms.push_back(core.atoms[j]);
            uint64_t trialMask = 0;
            for (int a : trial.atoms) trialMask |= uint64_t{1} << (a - 1);
            ScanResult r = scan(trialMask, -1, 0);
            assert(r.exhausted);
            if (!r.model) core = std::move(trial);
            else i++;
        }
    }
    lastEffort_ = steps_;
    OracleVerdict v = OracleVerdict::incoherent(std::move(core));
    v.effort = steps_;
    return v;
}

OracleVerdict EnumOracle::solve(const AssumptionSet& assumptions) {
    return solveImpl(assumptions, -1, 0);
}

OracleVerdict EnumOracle::solveWithBudget(const AssumptionSet& assumptions, const SolveBudget& budget) {
    if (budget.kind == SolveBudget::Kind::Effort)
        return solveImpl(assumptions, static_cast<int64_t>(budget.amount), 0);
    return solveImpl(assumptions, -1, nowSeconds() + budget.amount);
}

std::vector<Interpretation> EnumOracle::enumerateStable() {
    if (atoms_.size() - 1 > atomCap_)
        throw CapacityError("enumeration oracle capped at " + std::to_string(atomCap_) + " atoms");
    if (dirty_) compile();
    steps_ = 0;
    std::vector<Interpretation> models;
    const int n = atoms_.size() - 1;
    std::vector<int> idx;
    for (int k = 0; k <= n; k++) {
        idx.resize(k);
        for (int i = 0; i < k; i++) idx[i] = i;
        for (;;) {
            uint64_t mask = 0;
            for (int i : idx) mask |= uint64_t{1} << i;
            if (classicalModel(mask) && stableCandidate(mask)) models.push_back(toInterpretation(mask));
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) i--;
            if (i < 0) break;
            idx[i]++;
            for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
        }
    }
    return models;
}

std::optional<std::pair<CostVector, Interpretation>> EnumOracle::optimumOracle(const WeakConstraintSet& weak) {
    std::vector<Interpretation> models = enumerateStable();
    if (models.empty()) return std::nullopt;
    size_t best = 0;
    CostVector bestCost = costVector(weak, models[0]);
    for (size_t i = 1; i < models.size(); i++) {
        CostVector cv = costVector(weak, models[i]);
        if (cv.precedes(bestCost)) { best = i; bestCost = cv; }
    }
    return std::make_pair(bestCost, models[best]);
}

} // namespace coreshrink
