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

#ifndef CORESHRINK_CDCL_ORACLE_H
#define CORESHRINK_CDCL_ORACLE_H

#include "Oracle.h"

#include <memory>

namespace coreshrink {

/// Conflict-driven oracle for normal programs: clause learning over the
/// program completion, counter-based propagation of sum and count
/// constraints, lazy stability enforcement through unfounded-set nogoods,
/// and cores from the final conflict analysis.
///
/// Restrictions: no rule may have two head atoms, and aggregates may occur
/// only in integrity-constraint bodies; violations raise
/// UnsupportedFeatureError pointing at the enumeration oracle.
///
/// Rules may keep arriving between solves; the completion of a redefined
/// atom is swapped behind a fresh guard literal, so learned clauses stay
/// sound and are retained. The caller's atom table must outlive the
/// oracle and may only grow.
class CdclOracle : public Oracle {
public:
    explicit CdclOracle(const Program& base, uint64_t seed = 0);
    ~CdclOracle() override;

    CdclOracle(const CdclOracle&) = delete;
    CdclOracle& operator=(const CdclOracle&) = delete;

    void addRule(const Rule& r) override;
    OracleVerdict solve(const AssumptionSet& assumptions) override;
    OracleVerdict solveWithBudget(const AssumptionSet& assumptions, const SolveBudget& budget) override;

    int64_t conflicts() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace coreshrink

#endif
