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

#ifndef CORESHRINK_WEAK_CONSTRAINTS_H
#define CORESHRINK_WEAK_CONSTRAINTS_H

#include "Program.h"

#include <map>

namespace coreshrink {

/// A soft rule "w@l <- body": models satisfying the body pay weight w at level l.
struct WeakConstraint {
    std::vector<BodyElement> body;
    int64_t weight;
    int level;
};

/// Multiset semantics: duplicates contribute to the cost independently;
/// identity is the insertion index.
struct WeakConstraintSet {
    std::vector<WeakConstraint> items;

    bool empty() const { return items.empty(); }

    /// Distinct levels, greatest first.
    std::vector<int> levelsDescending() const {
        std::vector<int> ls;
        for (const auto& w : items)
            if (std::find(ls.begin(), ls.end(), w.level) == ls.end()) ls.push_back(w.level);
        std::sort(ls.rbegin(), ls.rend());
        return ls;
    }

    /// Indices of the level-l constraints, in insertion order.
    std::vector<size_t> indicesAtLevel(int level) const {
        std::vector<size_t> idx;
        for (size_t i = 0; i < items.size(); i++)
            if (items[i].level == level) idx.push_back(i);
        return idx;
    }
};

/// Per-level penalty totals; an absent level is 0.
struct CostVector {
    std::map<int, int64_t> perLevel;

    int64_t get(int level) const {
        auto it = perLevel.find(level);
        return it == perLevel.end() ? 0 : it->second;
    }
    void set(int level, int64_t value) {
        assert(value >= 0 && level >= 1);
        perLevel[level] = value;
    }

    bool operator==(const CostVector& other) const {
        for (const auto& [l, v] : perLevel)
            if (other.get(l) != v) return false;
        for (const auto& [l, v] : other.perLevel)
            if (get(l) != v) return false;
        return true;
    }

    /// True when this vector is lexicographically below `other`, higher
    /// levels being more significant.
    bool precedes(const CostVector& other) const {
        std::vector<int> levels;
        for (const auto& [l, v] : perLevel) levels.push_back(l);
        for (const auto& [l, v] : other.perLevel)
            if (std::find(levels.begin(), levels.end(), l) == levels.end()) levels.push_back(l);
        std::sort(levels.rbegin(), levels.rend());
        for (int l : levels) {
            if (get(l) < other.get(l)) return true;
            if (get(l) > other.get(l)) return false;
        }
        return false;
    }
};

} // namespace coreshrink

#endif
