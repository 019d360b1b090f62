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

#ifndef CORESHRINK_ORACLE_H
#define CORESHRINK_ORACLE_H

#include "Program.h"

#include <optional>

namespace coreshrink {

/// Atoms the oracle must make true. Order is significant: cores come back
/// in this order and shrinking probes prefixes of it.
struct AssumptionSet {
    std::vector<int> atoms;

    AssumptionSet() = default;
    explicit AssumptionSet(std::vector<int> a) : atoms(std::move(a)) {}
    size_t size() const { return atoms.size(); }
    bool empty() const { return atoms.empty(); }
};

enum class SolveStatus { Coherent, Incoherent, Unknown };

struct OracleVerdict {
    SolveStatus status;
    std::optional<Interpretation> model; // Coherent: a stable model containing the assumptions
    std::optional<AssumptionSet> core;   // Incoherent: assumptions jointly unsatisfiable
    int64_t effort = 0;                  // steps or conflicts spent on this call

    static OracleVerdict coherent(Interpretation m) { return {SolveStatus::Coherent, std::move(m), std::nullopt}; }
    static OracleVerdict incoherent(AssumptionSet c) { return {SolveStatus::Incoherent, std::nullopt, std::move(c)}; }
    static OracleVerdict unknown() { return {SolveStatus::Unknown, std::nullopt, std::nullopt}; }
};

struct SolveBudget {
    enum class Kind { WallClockSeconds, Effort };
    Kind kind;
    double amount; // seconds, or a count of candidate checks / conflicts

    static SolveBudget seconds(double s) { assert(s > 0); return {Kind::WallClockSeconds, s}; }
    static SolveBudget effort(int64_t n) { assert(n >= 0); return {Kind::Effort, static_cast<double>(n)}; }
};

/// An incremental assumption-based stable-model oracle. Rules added after
/// construction stay active for every later solve. A handle serves one
/// solve at a time.
class Oracle {
public:
    virtual ~Oracle() = default;
    virtual void addRule(const Rule& r) = 0;
    virtual OracleVerdict solve(const AssumptionSet& assumptions) = 0;
    virtual OracleVerdict solveWithBudget(const AssumptionSet& assumptions, const SolveBudget& budget) = 0;
};

} // namespace coreshrink

#endif
