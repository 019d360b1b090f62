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

#include "coreshrink/CdclOracle.h"

#include <chrono>
#include <cmath>
#include <unordered_set>

namespace coreshrink {

namespace {

inline int mkLit(int var, bool neg = false) { return var * 2 + (neg ? 1 : 0); }
inline int litVar(int lit) { return lit >> 1; }
inline bool litSign(int lit) { return lit & 1; }
inline int litNeg(int lit) { return lit ^ 1; }

constexpr int kNoClause = -1;
constexpr int kUndefLit = -2;

enum : int8_t { kUndef = 0, kTrue = 1, kFalse = -1 };

double nowSeconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

int64_t luby(int64_t i) {
    // the i-th element of the Luby restart sequence, 1-based
    int64_t k = 1;
    while ((int64_t{1} << k) - 1 < i + 1) k++;
    while ((int64_t{1} << k) - 1 != i + 1) {
        i -= (int64_t{1} << (k - 1)) - 1;
        k = 1;
        while ((int64_t{1} << k) - 1 < i + 1) k++;
    }
    return int64_t{1} << (k - 1);
}

struct Clause {
    std::vector<int> lits;
};

/// defLit <-> (sum of weights over true lits >= bound)
struct LinearGe {
    std::vector<int> lits;
    std::vector<int64_t> weights;
    int64_t bound;
    int defLit;
    int64_t sumTrue = 0;
    int64_t sumPossible = 0;
};

} // namespace

struct CdclOracle::Impl {
    const AtomTable& atoms;
    uint64_t seed;
    bool randomPhase;

    bool ok = true;

    // solver core
    std::vector<int8_t> assigns;      // per var
    std::vector<int> levels;          // per var
    std::vector<int> reasons;         // per var, clause index or kNoClause
    std::vector<char> phase;          // per var, saved polarity (true = assign negated)
    std::vector<double> activity;     // per var
    double varInc = 1.0;
    std::vector<int> trail;
    std::vector<int> trailLim;
    size_t qhead = 0;

    std::vector<Clause> clauses;
    std::vector<std::vector<int>> watches; // by lit: clauses to visit when lit becomes true
    std::vector<char> seen;

    // order heap
    std::vector<int> heap;
    std::vector<int> heapPos; // per var, -1 when absent

    // aggregates
    std::vector<LinearGe> aggs;
    std::vector<std::vector<std::pair<int, int64_t>>> aggOcc; // by lit: (agg index, weight)

    // program structure
    int trueVar; // constant
    struct AtomInfo {
        int var = -1;
        std::vector<int> bodyLits; // one per defining rule
        bool hasChoice = false;
        bool hasFact = false;
        int guardVar = -1;
        bool dirty = false;
    };
    std::vector<AtomInfo> info;    // by atom id
    std::vector<int> varAtom;      // by var, -1 for auxiliaries
    std::vector<int> guardAtoms;   // atoms owning an active guard, build order

    struct DefRule {
        int head;
        std::vector<Literal> positive; // depth 0
        std::vector<Literal> negated;  // depth 1 and 2
        int bodyLit;
    };
    std::vector<DefRule> defRules;
    std::vector<std::vector<int>> posOcc; // by atom id: defRules waiting on it positively
    bool tight = true;
    bool tightDirty = true;

    // statistics
    int64_t totalConflicts = 0;

    explicit Impl(const Program& base, uint64_t s) : atoms(base.atoms), seed(s), randomPhase(s != 0) {
        trueVar = newVar();
        uncheckedEnqueue(mkLit(trueVar), kNoClause);
        for (const auto& r : base.rules) addRule(r);
    }

    int trueLit() const { return mkLit(trueVar); }
    int falseLit() const { return mkLit(trueVar, true); }

    // ------------------------------------------------------------------ vars

    int newVar() {
        int v = static_cast<int>(assigns.size());
        assigns.push_back(kUndef);
        levels.push_back(0);
        reasons.push_back(kNoClause);
        if (randomPhase) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            phase.push_back((seed >> 32) & 1);
        } else {
            phase.push_back(0);
        }
        activity.push_back(0.0);
        watches.emplace_back();
        watches.emplace_back();
        aggOcc.emplace_back();
        aggOcc.emplace_back();
        seen.push_back(0);
        varAtom.push_back(-1);
        heapPos.push_back(-1);
        heapInsert(v);
        return v;
    }

    int8_t value(int lit) const {
        int8_t a = assigns[litVar(lit)];
        return litSign(lit) ? static_cast<int8_t>(-a) : a;
    }

    int decisionLevel() const { return static_cast<int>(trailLim.size()); }

    // ------------------------------------------------------------------ heap

    bool heapLess(int a, int b) const {
        return activity[a] > activity[b] || (activity[a] == activity[b] && a < b);
    }

    void heapInsert(int v) {
        if (heapPos[v] != -1) return;
        heapPos[v] = static_cast<int>(heap.size());
        heap.push_back(v);
        heapUp(heapPos[v]);
    }

    void heapUp(int i) {
        int v = heap[i];
        while (i > 0) {
            int parent = (i - 1) / 2;
            if (!heapLess(v, heap[parent])) break;
            heap[i] = heap[parent];
            heapPos[heap[i]] = i;
            i = parent;
        }
        heap[i] = v;
        heapPos[v] = i;
    }

    void heapDown(int i) {
        int v = heap[i];
        for (;;) {
            int child = 2 * i + 1;
            if (child >= static_cast<int>(heap.size())) break;
            if (child + 1 < static_cast<int>(heap.size()) && heapLess(heap[child + 1], heap[child])) child++;
            if (!heapLess(heap[child], v)) break;
            heap[i] = heap[child];
            heapPos[heap[i]] = i;
            i = child;
        }
        heap[i] = v;
        heapPos[v] = i;
    }

    int heapPopMax() {
        int v = heap[0];
        heapPos[v] = -1;
        heap[0] = heap.back();
        heap.pop_back();
        if (!heap.empty()) {
            heapPos[heap[0]] = 0;
            heapDown(0);
        }
        return v;
    }

    void bumpVar(int v) {
        activity[v] += varInc;
        if (activity[v] > 1e100) {
            for (double& a : activity) a *= 1e-100;
            varInc *= 1e-100;
        }
        if (heapPos[v] != -1) heapUp(heapPos[v]);
    }

    // ------------------------------------------------------------ assignment

    void uncheckedEnqueue(int lit, int reason) {
        int v = litVar(lit);
        assert(assigns[v] == kUndef);
        assigns[v] = litSign(lit) ? kFalse : kTrue;
        levels[v] = decisionLevel();
        reasons[v] = reason;
        trail.push_back(lit);
        for (const auto& [ai, w] : aggOcc[lit]) aggs[ai].sumTrue += w;
        for (const auto& [ai, w] : aggOcc[litNeg(lit)]) aggs[ai].sumPossible -= w;
    }

    void cancelUntil(int level) {
        if (decisionLevel() <= level) return;
        int bound = trailLim[level];
        for (int i = static_cast<int>(trail.size()) - 1; i >= bound; i--) {
            int lit = trail[i];
            int v = litVar(lit);
            for (const auto& [ai, w] : aggOcc[lit]) aggs[ai].sumTrue -= w;
            for (const auto& [ai, w] : aggOcc[litNeg(lit)]) aggs[ai].sumPossible += w;
            phase[v] = assigns[v] == kFalse;
            assigns[v] = kUndef;
            reasons[v] = kNoClause;
            heapInsert(v);
        }
        trail.resize(bound);
        trailLim.resize(level);
        qhead = trail.size();
    }

    // --------------------------------------------------------------- clauses

    void attach(int ci) {
        const Clause& c = clauses[ci];
        assert(c.lits.size() >= 2);
        watches[litNeg(c.lits[0])].push_back(ci);
        watches[litNeg(c.lits[1])].push_back(ci);
    }

    /// Root-level clause addition with the usual simplifications.
    void addClauseRoot(std::vector<int> lits) {
        assert(decisionLevel() == 0);
        if (!ok) return;
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        std::vector<int> kept;
        for (size_t i = 0; i < lits.size(); i++) {
            if (i + 1 < lits.size() && lits[i + 1] == litNeg(lits[i])) return; // tautology
            if (value(lits[i]) == kTrue) return;
            if (value(lits[i]) != kFalse) kept.push_back(lits[i]);
        }
        if (kept.empty()) { ok = false; return; }
        if (kept.size() == 1) {
            uncheckedEnqueue(kept[0], kNoClause);
            if (propagate() != kNoClause) ok = false;
            return;
        }
        clauses.push_back({std::move(kept)});
        attach(static_cast<int>(clauses.size()) - 1);
    }

    /// Mid-search clause addition. The clause must contain no true literal
    /// and at most one unassigned literal; returns a conflict index when it
    /// is fully false, otherwise propagates the unassigned literal.
    int attachDynamic(std::vector<int> lits) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        // watch the unassigned literal and the deepest false ones
        auto depth = [&](int lit) { return value(lit) == kUndef ? INT32_MAX : levels[litVar(lit)]; };
        std::sort(lits.begin(), lits.end(), [&](int a, int b) {
            if (depth(a) != depth(b)) return depth(a) > depth(b);
            return a < b;
        });
        if (lits.size() == 1) lits.push_back(falseLit());
        clauses.push_back({lits});
        int ci = static_cast<int>(clauses.size()) - 1;
        attach(ci);
        if (value(lits[0]) == kUndef) {
            uncheckedEnqueue(lits[0], ci);
            return kNoClause;
        }
        assert(value(lits[0]) == kFalse);
        return ci;
    }

    // ----------------------------------------------------------- propagation

    int propagate() {
        while (qhead < trail.size()) {
            int p = trail[qhead++];
            std::vector<int>& watchList = watches[p];
            size_t keep = 0;
            for (size_t i = 0; i < watchList.size(); i++) {
                int ci = watchList[i];
                Clause& c = clauses[ci];
                int falseLit_ = litNeg(p);
                if (c.lits[0] == falseLit_) std::swap(c.lits[0], c.lits[1]);
                assert(c.lits[1] == falseLit_);
                if (value(c.lits[0]) == kTrue) { watchList[keep++] = ci; continue; }
                bool moved = false;
                for (size_t k = 2; k < c.lits.size(); k++) {
                    if (value(c.lits[k]) != kFalse) {
                        std::swap(c.lits[1], c.lits[k]);
                        watches[litNeg(c.lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                watchList[keep++] = ci;
                if (value(c.lits[0]) == kFalse) {
                    for (size_t j = i + 1; j < watchList.size(); j++) watchList[keep++] = watchList[j];
                    watchList.resize(keep);
                    qhead = trail.size();
                    return ci;
                }
                uncheckedEnqueue(c.lits[0], ci);
            }
            watchList.resize(keep);
        }
        return kNoClause;
    }

    /// One inspection round over the aggregate constraints. Implied
    /// literals materialize as explanation clauses, so the clause engine
    /// owns every reason.
    enum class AggResult { Quiet, Progress, Conflict };

    AggResult aggregatePass(int& conflictOut) {
        for (size_t ai = 0; ai < aggs.size(); ai++) {
            LinearGe& a = aggs[ai];
            int8_t dv = value(a.defLit);
            if (a.sumTrue >= a.bound && dv != kTrue) {
                std::vector<int> clause{a.defLit};
                int64_t acc = 0;
                for (size_t i = 0; i < a.lits.size() && acc < a.bound; i++)
                    if (value(a.lits[i]) == kTrue) { acc += a.weights[i]; clause.push_back(litNeg(a.lits[i])); }
                int confl = attachDynamic(std::move(clause));
                if (confl != kNoClause) { conflictOut = confl; return AggResult::Conflict; }
                return AggResult::Progress;
            }
            if (a.sumPossible < a.bound && dv != kFalse) {
                std::vector<int> clause{litNeg(a.defLit)};
                for (size_t i = 0; i < a.lits.size(); i++)
                    if (value(a.lits[i]) == kFalse) clause.push_back(a.lits[i]);
                int confl = attachDynamic(std::move(clause));
                if (confl != kNoClause) { conflictOut = confl; return AggResult::Conflict; }
                return AggResult::Progress;
            }
            if (dv == kTrue && a.sumTrue < a.bound) {
                for (size_t i = 0; i < a.lits.size(); i++) {
                    if (value(a.lits[i]) != kUndef) continue;
                    if (a.sumPossible - a.weights[i] < a.bound) {
                        std::vector<int> clause{a.lits[i], litNeg(a.defLit)};
                        for (size_t k = 0; k < a.lits.size(); k++)
                            if (value(a.lits[k]) == kFalse) clause.push_back(a.lits[k]);
                        int confl = attachDynamic(std::move(clause));
                        if (confl != kNoClause) { conflictOut = confl; return AggResult::Conflict; }
                        return AggResult::Progress;
                    }
                }
            }
            if (dv == kFalse && a.sumPossible >= a.bound) {
                for (size_t i = 0; i < a.lits.size(); i++) {
                    if (value(a.lits[i]) != kUndef) continue;
                    if (a.sumTrue + a.weights[i] >= a.bound) {
                        std::vector<int> clause{litNeg(a.lits[i]), a.defLit};
                        for (size_t k = 0; k < a.lits.size(); k++)
                            if (value(a.lits[k]) == kTrue) clause.push_back(litNeg(a.lits[k]));
                        int confl = attachDynamic(std::move(clause));
                        if (confl != kNoClause) { conflictOut = confl; return AggResult::Conflict; }
                        return AggResult::Progress;
                    }
                }
            }
        }
        return AggResult::Quiet;
    }

    int propagateAll() {
        for (;;) {
            int confl = propagate();
            if (confl != kNoClause) return confl;
            int aggConfl = kNoClause;
            AggResult r = aggregatePass(aggConfl);
            if (r == AggResult::Conflict) return aggConfl;
            if (r == AggResult::Quiet) return kNoClause;
        }
    }

    // ------------------------------------------------------------- analysis

    void analyze(int confl, std::vector<int>& learnt, int& btLevel) {
        learnt.clear();
        learnt.push_back(kUndefLit);
        int pathC = 0;
        int p = kUndefLit;
        int index = static_cast<int>(trail.size()) - 1;

        do {
            assert(confl != kNoClause);
            const Clause& c = clauses[confl];
            for (size_t j = (p == kUndefLit ? 0 : 1); j < c.lits.size(); j++) {
                int q = c.lits[j];
                int v = litVar(q);
                if (!seen[v] && levels[v] > 0) {
                    seen[v] = 1;
                    bumpVar(v);
                    if (levels[v] >= decisionLevel()) pathC++;
                    else learnt.push_back(q);
                }
            }
            while (!seen[litVar(trail[index])]) index--;
            p = trail[index];
            confl = reasons[litVar(p)];
            seen[litVar(p)] = 0;
            pathC--;
            index--;
        } while (pathC > 0);
        learnt[0] = litNeg(p);

        if (learnt.size() == 1) {
            btLevel = 0;
        } else {
            int maxI = 1;
            for (size_t i = 2; i < learnt.size(); i++)
                if (levels[litVar(learnt[i])] > levels[litVar(learnt[maxI])]) maxI = static_cast<int>(i);
            std::swap(learnt[1], learnt[maxI]);
            btLevel = levels[litVar(learnt[1])];
        }
        for (int lit : learnt) seen[litVar(lit)] = 0;
    }

    /// Walks back from a failed assumption and collects the assumption
    /// decisions its refutation rests on.
    std::vector<int> analyzeFinal(int failed) {
        std::vector<int> conflictVars;
        if (levels[litVar(failed)] > 0) seen[litVar(failed)] = 1;
        for (int i = static_cast<int>(trail.size()) - 1; i >= (trailLim.empty() ? 0 : trailLim[0]); i--) {
            int v = litVar(trail[i]);
            if (!seen[v]) continue;
            if (reasons[v] == kNoClause) {
                assert(levels[v] > 0);
                conflictVars.push_back(v);
            } else {
                const Clause& c = clauses[reasons[v]];
                for (size_t j = 1; j < c.lits.size(); j++)
                    if (levels[litVar(c.lits[j])] > 0) seen[litVar(c.lits[j])] = 1;
            }
            seen[v] = 0;
        }
        seen[litVar(failed)] = 0;
        conflictVars.push_back(litVar(failed));
        return conflictVars;
    }

    // ------------------------------------------------------------ completion

    int mapAtomVar(int atom) {
        if (atom >= static_cast<int>(info.size())) info.resize(atoms.size());
        AtomInfo& ai = info[atom];
        if (ai.var == -1) {
            ai.var = newVar();
            varAtom[ai.var] = atom;
            ai.dirty = true;
        }
        return ai.var;
    }

    /// SAT literal of a body literal: depth 1 negates, depths 0 and 2 are
    /// classically positive. The false constant folds to the constants.
    int mapLit(const Literal& l) {
        if (l.atom == AtomTable::kFalse) return l.depth == 1 ? trueLit() : falseLit();
        return mkLit(mapAtomVar(l.atom), l.depth == 1);
    }

    void addRule(const Rule& r) {
        if (!ok) return;
        std::vector<int> headAtoms;
        for (int a : r.head)
            if (a != AtomTable::kFalse) headAtoms.push_back(a);
        if (headAtoms.size() >= 2)
            throw UnsupportedFeatureError("disjunctive heads are outside this oracle; use the enumeration oracle");

        if (headAtoms.empty()) {
            std::vector<int> clause;
            for (const auto& e : r.body) {
                if (isLiteral(e)) clause.push_back(litNeg(mapLit(asLiteral(e))));
                else clause.push_back(litNeg(aggregateLit(asAggregate(e))));
            }
            addClauseRoot(std::move(clause));
            return;
        }

        int head = headAtoms[0];
        DefRule dr;
        dr.head = head;
        for (const auto& e : r.body) {
            if (!isLiteral(e))
                throw UnsupportedFeatureError("aggregates outside integrity constraints are unsupported; use the enumeration oracle");
            const Literal& l = asLiteral(e);
            if (l.depth == 0) dr.positive.push_back(l);
            else dr.negated.push_back(l);
        }
        mapAtomVar(head);

        // body literal
        std::vector<int> bodyLits;
        bool neverFires = false;
        for (const auto& e : r.body) {
            int lit = mapLit(asLiteral(e));
            if (lit == trueLit()) continue;
            if (lit == falseLit()) { neverFires = true; break; }
            bodyLits.push_back(lit);
        }
        if (neverFires) return;

        if (r.isChoice()) {
            info[head].hasChoice = true;
            info[head].dirty = true;
            dr.bodyLit = mkLit(info[head].var);
            registerDefRule(std::move(dr));
            return;
        }

        int bodyLit;
        if (bodyLits.empty()) {
            bodyLit = trueLit();
            info[head].hasFact = true;
        } else if (bodyLits.size() == 1) {
            bodyLit = bodyLits[0];
        } else {
            int beta = newVar();
            bodyLit = mkLit(beta);
            std::vector<int> big{bodyLit};
            for (int l : bodyLits) {
                addClauseRoot({litNeg(bodyLit), l});
                big.push_back(litNeg(l));
            }
            addClauseRoot(std::move(big));
        }
        addClauseRoot({litNeg(bodyLit), mkLit(info[head].var)});
        info[head].bodyLits.push_back(bodyLit);
        info[head].dirty = true;
        dr.bodyLit = bodyLit;
        registerDefRule(std::move(dr));
    }

    void registerDefRule(DefRule dr) {
        int idx = static_cast<int>(defRules.size());
        if (posOcc.size() < static_cast<size_t>(atoms.size())) posOcc.resize(atoms.size());
        for (const auto& l : dr.positive)
            if (l.atom != AtomTable::kFalse) posOcc[l.atom].push_back(idx);
        defRules.push_back(std::move(dr));
        tightDirty = true;
    }

    /// Rebuilds the support clause of every redefined atom behind a fresh
    /// guard; the old guard is asserted true, which retires the stale
    /// clause and every learned clause resting on it.
    void buildCompletion() {
        if (info.size() < static_cast<size_t>(atoms.size())) info.resize(atoms.size());
        for (int a = 0; a < static_cast<int>(info.size()); a++) {
            AtomInfo& ai = info[a];
            if (!ai.dirty || ai.var == -1) continue;
            ai.dirty = false;
            if (ai.guardVar != -1) {
                addClauseRoot({mkLit(ai.guardVar)});
                ai.guardVar = -1;
                guardAtoms.erase(std::remove(guardAtoms.begin(), guardAtoms.end(), a), guardAtoms.end());
            }
            if (ai.hasChoice || ai.hasFact) continue;
            ai.guardVar = newVar();
            std::vector<int> clause{mkLit(ai.guardVar), mkLit(ai.var, true)};
            for (int b : ai.bodyLits) clause.push_back(b);
            addClauseRoot(std::move(clause));
            guardAtoms.push_back(a);
        }
    }

    void recomputeTight() {
        tightDirty = false;
        // cycle search over positive dependencies
        std::vector<std::vector<int>> adj(atoms.size());
        for (const auto& dr : defRules)
            for (const auto& l : dr.positive)
                if (l.atom != AtomTable::kFalse) adj[dr.head].push_back(l.atom);

        std::vector<int8_t> mark(atoms.size(), 0); // 0 unseen, 1 on stack, 2 done
        std::vector<std::pair<int, size_t>> stack;
        for (int start = 0; start < static_cast<int>(atoms.size()); start++) {
            if (mark[start] != 0) continue;
            stack.push_back({start, 0});
            mark[start] = 1;
            while (!stack.empty()) {
                int a = stack.back().first;
                size_t edge = stack.back().second;
                if (edge >= adj[a].size()) {
                    mark[a] = 2;
                    stack.pop_back();
                    continue;
                }
                stack.back().second++;
                int next = adj[a][edge];
                if (mark[next] == 1) { tight = false; return; }
                if (mark[next] == 0) {
                    mark[next] = 1;
                    stack.push_back({next, 0});
                }
            }
        }
        tight = true;
    }

    // ------------------------------------------------------------ aggregates

    int aggregateLit(const Aggregate& agg) {
        switch (agg.rel) {
            case Rel::Ge: return geLit(agg, agg.bound);
            case Rel::Gt: return geLit(agg, agg.bound + 1);
            case Rel::Le: return litNeg(geLit(agg, agg.bound + 1));
            case Rel::Lt: return litNeg(geLit(agg, agg.bound));
            case Rel::Eq: return eqLit(agg);
            case Rel::Ne: return litNeg(eqLit(agg));
        }
        return falseLit();
    }

    int eqLit(const Aggregate& agg) {
        int atLeast = geLit(agg, agg.bound);
        int above = geLit(agg, agg.bound + 1);
        int e = mkLit(newVar());
        addClauseRoot({litNeg(e), atLeast});
        addClauseRoot({litNeg(e), litNeg(above)});
        addClauseRoot({e, litNeg(atLeast), above});
        return e;
    }

    int geLit(const Aggregate& agg, int64_t bound) {
        std::vector<int> lits;
        std::vector<int64_t> weights;
        int64_t total = 0;
        for (const auto& e : agg.elements) {
            if (e.weight == 0) continue;
            int lit = mapLit(e.lit);
            if (lit == trueLit()) { bound -= e.weight; continue; }
            if (lit == falseLit()) continue;
            lits.push_back(lit);
            weights.push_back(e.weight);
            total += e.weight;
        }
        if (bound <= 0) return trueLit();
        if (bound > total) return falseLit();

        LinearGe ge;
        ge.lits = std::move(lits);
        ge.weights = std::move(weights);
        ge.bound = bound;
        ge.defLit = mkLit(newVar());
        ge.sumPossible = total;
        int ai = static_cast<int>(aggs.size());
        for (size_t i = 0; i < ge.lits.size(); i++) {
            aggOcc[ge.lits[i]].push_back({ai, ge.weights[i]});
            if (value(ge.lits[i]) == kTrue) ge.sumTrue += ge.weights[i];
            else if (value(ge.lits[i]) == kFalse) ge.sumPossible -= ge.weights[i];
        }
        aggs.push_back(std::move(ge));
        return aggs.back().defLit;
    }

    // ------------------------------------------------------------- stability

    /// Least model of the reduct of the candidate; the candidate is stable
    /// iff it derives itself.
    bool stabilityAccepts(std::vector<int>& unfoundedOut) {
        std::vector<char> inModel(atoms.size(), 0);
        std::vector<int> modelAtoms;
        for (int a = 0; a < static_cast<int>(info.size()); a++)
            if (info[a].var != -1 && assigns[info[a].var] == kTrue) {
                inModel[a] = 1;
                modelAtoms.push_back(a);
            }

        std::vector<char> derived(atoms.size(), 0);
        std::vector<int> pending(defRules.size(), 0);
        std::vector<char> usable(defRules.size(), 0);
        std::vector<int> queue;

        for (size_t i = 0; i < defRules.size(); i++) {
            const DefRule& dr = defRules[i];
            bool alive = true;
            for (const auto& l : dr.negated) {
                bool member = l.atom != AtomTable::kFalse && inModel[l.atom];
                bool sat = l.depth == 1 ? !member : member;
                if (!sat) { alive = false; break; }
            }
            if (!alive) continue;
            for (const auto& l : dr.positive)
                if (l.atom == AtomTable::kFalse) { alive = false; break; }
            if (!alive) continue;
            usable[i] = 1;
            pending[i] = static_cast<int>(dr.positive.size());
            if (pending[i] == 0 && !derived[dr.head]) {
                derived[dr.head] = 1;
                queue.push_back(dr.head);
            }
        }
        size_t qh = 0;
        while (qh < queue.size()) {
            int a = queue[qh++];
            if (a >= static_cast<int>(posOcc.size())) continue;
            for (int ri : posOcc[a]) {
                if (!usable[ri]) continue;
                const DefRule& dr = defRules[ri];
                int remaining = 0;
                for (const auto& l : dr.positive)
                    if (!derived[l.atom]) remaining++;
                if (remaining == 0 && !derived[dr.head]) {
                    derived[dr.head] = 1;
                    queue.push_back(dr.head);
                }
            }
        }

        unfoundedOut.clear();
        for (int a : modelAtoms) {
            assert(!derived[a] || inModel[a]);
            if (!derived[a]) unfoundedOut.push_back(a);
        }
        return unfoundedOut.empty();
    }

    void addUnfoundedNogoods(const std::vector<int>& unfounded) {
        assert(decisionLevel() == 0);
        std::unordered_set<int> uset(unfounded.begin(), unfounded.end());
        std::vector<int> commons;
        for (int u : unfounded) {
            assert(info[u].guardVar != -1);
            commons.push_back(mkLit(info[u].guardVar));
        }
        std::vector<int> external;
        for (const auto& dr : defRules) {
            if (uset.find(dr.head) == uset.end()) continue;
            bool ext = true;
            for (const auto& l : dr.positive)
                if (uset.count(l.atom)) { ext = false; break; }
            if (ext) external.push_back(dr.bodyLit);
        }
        for (int u : unfounded) {
            std::vector<int> clause = commons;
            clause.push_back(mkLit(info[u].var, true));
            for (int b : external) clause.push_back(b);
            addClauseRoot(std::move(clause));
        }
    }

    // ---------------------------------------------------------------- search

    OracleVerdict runSolve(const AssumptionSet& assumptions, int64_t conflictBudget, double deadline) {
        if (!ok) return OracleVerdict::incoherent(AssumptionSet{});

        for (int a : assumptions.atoms) {
            if (!atoms.contains(a) || a == AtomTable::kFalse)
                throw StructuralError("assumption references an invalid atom");
            mapAtomVar(a);
        }
        buildCompletion();
        if (!ok) return OracleVerdict::incoherent(AssumptionSet{});
        if (tightDirty) recomputeTight();

        std::vector<int> assumptionLits;
        for (int a : guardAtoms) assumptionLits.push_back(mkLit(info[a].guardVar, true));
        size_t guardCount = assumptionLits.size();
        for (int a : assumptions.atoms) assumptionLits.push_back(mkLit(info[a].var));

        auto makeCore = [&](const std::vector<int>& conflictVars) {
            std::vector<char> inCore(atoms.size(), 0);
            for (int v : conflictVars) {
                int atom = varAtom[v];
                if (atom != -1) inCore[atom] = 1;
            }
            AssumptionSet core;
            for (int a : assumptions.atoms)
                if (inCore[a]) core.atoms.push_back(a);
            return core;
        };

        int64_t conflictsThisCall = 0;
        int64_t restartCount = 0;
        int64_t restartLimit = 64 * luby(restartCount);
        int64_t conflictsSinceRestart = 0;
        std::vector<int> learnt;

        auto finish = [&](OracleVerdict v) {
            cancelUntil(0);
            v.effort = conflictsThisCall;
            return v;
        };

        for (;;) {
            int confl = propagateAll();
            if (confl != kNoClause) {
                conflictsThisCall++;
                totalConflicts++;
                conflictsSinceRestart++;
                if (decisionLevel() == 0) {
                    ok = false;
                    return finish(OracleVerdict::incoherent(AssumptionSet{}));
                }
                int btLevel;
                analyze(confl, learnt, btLevel);
                cancelUntil(btLevel);
                if (learnt.size() == 1) {
                    uncheckedEnqueue(learnt[0], kNoClause);
                } else {
                    clauses.push_back({learnt});
                    attach(static_cast<int>(clauses.size()) - 1);
                    uncheckedEnqueue(learnt[0], static_cast<int>(clauses.size()) - 1);
                }
                varInc /= 0.95;
                if (conflictBudget >= 0 && conflictsThisCall >= conflictBudget)
                    return finish(OracleVerdict::unknown());
                if (deadline > 0 && nowSeconds() > deadline)
                    return finish(OracleVerdict::unknown());
                if (conflictsSinceRestart >= restartLimit) {
                    conflictsSinceRestart = 0;
                    restartLimit = 64 * luby(++restartCount);
                    cancelUntil(0);
                }
                continue;
            }

            if (decisionLevel() < static_cast<int>(assumptionLits.size())) {
                int p = assumptionLits[decisionLevel()];
                if (value(p) == kTrue) {
                    trailLim.push_back(static_cast<int>(trail.size()));
                    continue;
                }
                if (value(p) == kFalse) {
                    if (decisionLevel() < static_cast<int>(guardCount)) {
                        // a guard is forced: some atom lost all support under
                        // the current definitions, incoherent until new rules
                        // arrive for it
                        return finish(OracleVerdict::incoherent(AssumptionSet{}));
                    }
                    std::vector<int> conflictVars = analyzeFinal(litNeg(p));
                    return finish(OracleVerdict::incoherent(makeCore(conflictVars)));
                }
                trailLim.push_back(static_cast<int>(trail.size()));
                uncheckedEnqueue(p, kNoClause);
                continue;
            }

            // decide
            int next = -1;
            while (!heap.empty()) {
                int v = heapPopMax();
                if (assigns[v] == kUndef) { next = v; break; }
            }
            if (next == -1) {
                std::vector<int> unfounded;
                if (tight || stabilityAccepts(unfounded)) {
                    Interpretation model;
                    for (int a = 1; a < static_cast<int>(info.size()); a++)
                        if (info[a].var != -1 && assigns[info[a].var] == kTrue) model.insert(a);
                    return finish(OracleVerdict::coherent(std::move(model)));
                }
                cancelUntil(0);
                addUnfoundedNogoods(unfounded);
                if (!ok) return finish(OracleVerdict::incoherent(AssumptionSet{}));
                continue;
            }
            trailLim.push_back(static_cast<int>(trail.size()));
            uncheckedEnqueue(mkLit(next, phase[next]), kNoClause);
        }
    }
};

CdclOracle::CdclOracle(const Program& base, uint64_t seed) : impl_(std::make_unique<Impl>(base, seed)) {}
CdclOracle::~CdclOracle() = default;

void CdclOracle::addRule(const Rule& r) {
    assert(impl_->decisionLevel() == 0);
    impl_->addRule(r);
}

OracleVerdict CdclOracle::solve(const AssumptionSet& assumptions) {
    return impl_->runSolve(assumptions, -1, 0);
}

OracleVerdict CdclOracle::solveWithBudget(const AssumptionSet& assumptions, const SolveBudget& budget) {
    if (budget.kind == SolveBudget::Kind::Effort)
        return impl_->runSolve(assumptions, static_cast<int64_t>(budget.amount), 0);
    return impl_->runSolve(assumptions, -1, nowSeconds() + budget.amount);
}

int64_t CdclOracle::conflicts() const { return impl_->totalConflicts; }

} // namespace coreshrink
