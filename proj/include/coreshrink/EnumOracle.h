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

#ifndef CORESHRINK_ENUM_ORACLE_H
#define CORESHRINK_ENUM_ORACLE_H

#include "Oracle.h"
#include "WeakConstraints.h"

#include <set>

namespace coreshrink {

/// Core quality of the reference oracle. Raw cores echo the whole
/// assumption set; minimal cores are reduced by deletion until set-minimal.
enum class CoreMode { Raw, Minimal };

/// Exact assumption-based search by candidate enumeration, disjunctive
/// heads included. Exists for correctness and cross-validation, not speed.
/// Candidates are visited by increasing cardinality, ties broken
/// lexicographically by atom id, so verdicts are deterministic.
///
/// Holds a reference to the caller's atom table, which may grow between
/// calls but must outlive the oracle.
class EnumOracle : public Oracle {
public:
    explicit EnumOracle(const Program& base, CoreMode coreMode = CoreMode::Raw, int atomCap = 22);

    void addRule(const Rule& r) override;
    OracleVerdict solve(const AssumptionSet& assumptions) override;
    OracleVerdict solveWithBudget(const AssumptionSet& assumptions, const SolveBudget& budget) override;

    /// Exactly the stable models of the current program.
    std::vector<Interpretation> enumerateStable();

    /// A cost-minimal stable model with its full cost vector, or nullopt
    /// when the program is incoherent. Test oracle only.
    std::optional<std::pair<CostVector, Interpretation>> optimumOracle(const WeakConstraintSet& weak);

    int64_t lastEffort() const { return lastEffort_; }

private:
    struct CompiledRule {
        uint64_t posMask;       // depth-0 and depth-2 atoms that must be in I
        uint64_t negMask;       // depth-1 atoms that must be out of I
        uint64_t reductPosMask; // depth-0 atoms that must persist under the reduct
        uint64_t headMask;
        std::vector<const Aggregate*> aggregates;
        bool constraint;
    };

    void compile();
    bool classicalModel(uint64_t mask) const;
    bool stableCandidate(uint64_t mask) const;
    bool aggregateHolds(const Aggregate& agg, uint64_t mask) const;
    Interpretation toInterpretation(uint64_t mask) const;

    // Visits candidates in the canonical order; returns the first stable
    // model containing `required`, nullopt when none, or Unknown when the
    // step budget dies first.
    struct ScanResult {
        bool exhausted;
        std::optional<uint64_t> model;
    };
    ScanResult scan(uint64_t required, int64_t maxSteps, double deadlineSeconds);

    OracleVerdict solveImpl(const AssumptionSet& assumptions, int64_t maxSteps, double deadlineSeconds);

    const AtomTable& atoms_;
    std::vector<Rule> rules_;
    CoreMode coreMode_;
    int atomCap_;
    std::vector<CompiledRule> compiled_;
    bool dirty_ = true;
    int64_t steps_ = 0;
    int64_t lastEffort_ = 0;
};

} // namespace coreshrink

#endif
