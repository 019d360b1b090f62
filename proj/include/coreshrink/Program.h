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

#ifndef CORESHRINK_PROGRAM_H
#define CORESHRINK_PROGRAM_H

#include "Errors.h"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace coreshrink {

/// Atoms are dense nonnegative ids. Id 0 is the false constant.
struct Atom {
    int id;
    std::string name;
    bool isFalseConstant;
};

class AtomTable {
public:
    static constexpr int kFalse = 0;
    static constexpr const char* kFalseName = "_false";

    AtomTable() { atoms_.push_back({kFalse, kFalseName, true}); byName_[kFalseName] = kFalse; }

    int add(const std::string& name) {
        assert(byName_.find(name) == byName_.end());
        int id = static_cast<int>(atoms_.size());
        atoms_.push_back({id, name, false});
        byName_[name] = id;
        return id;
    }

    /// Returns the existing id, or registers a fresh atom.
    int intern(const std::string& name) {
        auto it = byName_.find(name);
        return it != byName_.end() ? it->second : add(name);
    }

    int find(const std::string& name) const {
        auto it = byName_.find(name);
        return it != byName_.end() ? it->second : -1;
    }

    bool contains(int id) const { return id >= 0 && id < static_cast<int>(atoms_.size()); }

    const Atom& at(int id) const {
        if (!contains(id)) throw StructuralError("unknown atom id " + std::to_string(id));
        return atoms_[id];
    }

    const std::string& name(int id) const { return at(id).name; }
    int size() const { return static_cast<int>(atoms_.size()); }

private:
    std::vector<Atom> atoms_;
    std::unordered_map<std::string, int> byName_;
};

/// Default negation depth: 0 positive, 1 "not a", 2 "not not a".
/// Deeper nesting is normalized by parity into {1,2}.
struct Literal {
    int atom;
    int depth;

    static Literal make(int atom, int depth) {
        assert(depth >= 0);
        if (depth > 2) depth = (depth % 2 == 0) ? 2 : 1;
        return {atom, depth};
    }

    bool negated() const { return depth >= 1; }
    bool operator==(const Literal& other) const { return atom == other.atom && depth == other.depth; }
};

/// The shortcut for "not _false", always satisfied.
inline Literal topLiteral() { return {AtomTable::kFalse, 1}; }
inline Literal bottomLiteral() { return {AtomTable::kFalse, 0}; }
inline bool isTop(const Literal& l) { return l.atom == AtomTable::kFalse && l.depth == 1; }

struct AggregateElement {
    int64_t weight;
    Literal lit;
    bool operator==(const AggregateElement& other) const { return weight == other.weight && lit == other.lit; }
};

enum class Rel { Lt, Le, Ge, Gt, Eq, Ne };

const char* relText(Rel r);

struct Aggregate {
    std::vector<AggregateElement> elements;
    Rel rel;
    int64_t bound;

    /// A count aggregate is a sum whose weights are all 1.
    bool isCount() const {
        return std::all_of(elements.begin(), elements.end(),
                           [](const AggregateElement& e) { return e.weight == 1; });
    }
    bool operator==(const Aggregate& other) const {
        return elements == other.elements && rel == other.rel && bound == other.bound;
    }
};

using BodyElement = std::variant<Literal, Aggregate>;

inline bool isLiteral(const BodyElement& e) { return std::holds_alternative<Literal>(e); }
inline const Literal& asLiteral(const BodyElement& e) { return std::get<Literal>(e); }
inline const Aggregate& asAggregate(const BodyElement& e) { return std::get<Aggregate>(e); }

/// Integrity constraints carry head {_false}, never an empty head, so
/// "I ∩ H(r) is nonempty" is uniformly false for them.
struct Rule {
    std::vector<int> head;
    std::vector<BodyElement> body;

    bool isConstraint() const {
        return head.size() == 1 && head[0] == AtomTable::kFalse;
    }

    static Rule constraint(std::vector<BodyElement> body) {
        return Rule{{AtomTable::kFalse}, std::move(body)};
    }

    /// The choice pattern "a <- not not a".
    bool isChoice() const {
        return head.size() == 1 && head[0] != AtomTable::kFalse && body.size() == 1 &&
               isLiteral(body[0]) && asLiteral(body[0]).atom == head[0] && asLiteral(body[0]).depth == 2;
    }

    static Rule choice(int atom) {
        return Rule{{atom}, {Literal{atom, 2}}};
    }
};

struct Program {
    AtomTable atoms;
    std::vector<Rule> rules;

    void add(Rule r) {
        if (r.head.empty()) r.head.push_back(AtomTable::kFalse);
        for (int a : r.head)
            if (!atoms.contains(a)) throw StructuralError("rule head references unknown atom");
        rules.push_back(std::move(r));
    }
};

/// A set of true atoms; never contains the false constant.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::vector<int> atoms) : atoms_(std::move(atoms)) {
        std::sort(atoms_.begin(), atoms_.end());
        atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
        assert(atoms_.empty() || atoms_.front() != AtomTable::kFalse);
    }

    bool contains(int atom) const {
        return std::binary_search(atoms_.begin(), atoms_.end(), atom);
    }

    void insert(int atom) {
        assert(atom != AtomTable::kFalse);
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
        if (it == atoms_.end() || *it != atom) atoms_.insert(it, atom);
    }

    size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    const std::vector<int>& atoms() const { return atoms_; }
    auto begin() const { return atoms_.begin(); }
    auto end() const { return atoms_.end(); }

    bool operator==(const Interpretation& other) const { return atoms_ == other.atoms_; }
    bool operator<(const Interpretation& other) const { return atoms_ < other.atoms_; }

    bool subsetOf(const Interpretation& other) const {
        return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
    }

    Interpretation restrictedTo(const std::vector<int>& sortedAtoms) const {
        std::vector<int> out;
        std::set_intersection(atoms_.begin(), atoms_.end(), sortedAtoms.begin(), sortedAtoms.end(),
                              std::back_inserter(out));
        Interpretation r;
        r.atoms_ = std::move(out);
        return r;
    }

private:
    std::vector<int> atoms_;
};

} // namespace coreshrink

#endif
