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

#ifndef CORESHRINK_RELAXATION_H
#define CORESHRINK_RELAXATION_H

#include "Oracle.h"
#include "WeakConstraints.h"

#include <unordered_map>

namespace coreshrink {

/// Weight function and bookkeeping for soft literals. Soft atoms are fresh
/// "@soft_<k>" names, so they can never collide with parsed input atoms;
/// every non-soft atom weighs 0.
class SoftRegistry {
public:
    int64_t weight(int atom) const {
        auto it = weights_.find(atom);
        return it == weights_.end() ? 0 : it->second;
    }

    void setWeight(int atom, int64_t w) {
        assert(w >= 0 && isSoft(atom));
        weights_[atom] = w;
    }

    bool isSoft(int atom) const { return info_.find(atom) != info_.end(); }

    /// Soft atoms introduced for input weak constraints, as opposed to
    /// core relaxation.
    bool isOriginal(int atom) const {
        auto it = info_.find(atom);
        return it != info_.end() && it->second.original;
    }

    int64_t origin(int atom) const { return info_.at(atom).origin; }

    /// Registration order; assumption sets preserve it.
    const std::vector<int>& softOrder() const { return order_; }

    /// Registers a fresh soft atom in `program` with the given weight.
    int registerSoft(Program& program, int64_t weight, bool original, int64_t origin) {
        std::string name = "@soft_" + std::to_string(++counter_);
        assert(program.atoms.find(name) == -1);
        int atom = program.atoms.add(name);
        info_[atom] = {original, origin};
        weights_[atom] = weight;
        order_.push_back(atom);
        return atom;
    }

    int64_t totalWeight() const {
        int64_t t = 0;
        for (const auto& [a, w] : weights_) t += w;
        return t;
    }

    int64_t nextRelaxationId() { return ++relaxations_; }

private:
    struct Info {
        bool original;
        int64_t origin;
    };
    std::unordered_map<int, Info> info_;
    std::unordered_map<int, int64_t> weights_;
    std::vector<int> order_;
    int64_t counter_ = 0;
    int64_t relaxations_ = 0;
};

struct RelaxationOutput {
    std::vector<Rule> addedRules;
    std::vector<int> softAtoms; // fresh atoms, in creation order
    int64_t lbIncrement = 0;
};

/// Turns every level-l weak constraint into a relaxed integrity constraint
/// plus a choice rule over a fresh soft atom carrying the weight.
RelaxationOutput relaxLevel(const WeakConstraintSet& weak, int level, Program& program, SoftRegistry& registry);

/// Core relaxation of ONE: moves one stratum of weight from the core onto
/// n fresh soft literals chained by symmetry breakers, plus one count
/// constraint demanding all but one of the core. Raises the bound by the
/// stratum.
RelaxationOutput relaxCore(const AssumptionSet& core, int64_t stratum, Program& program, SoftRegistry& registry);

/// Folds all levels into level 1 by scaling weights level by level, lowest
/// remaining level first; the induced optimum order is unchanged.
WeakConstraintSet compileLevels(const WeakConstraintSet& weak);

} // namespace coreshrink

#endif
