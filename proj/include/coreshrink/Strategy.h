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

#ifndef CORESHRINK_STRATEGY_H
#define CORESHRINK_STRATEGY_H

#include "Oracle.h"
#include "WeakConstraints.h"

#include <optional>
#include <string>

namespace coreshrink {

enum class Algorithm { LinSU, One };
enum class ShrinkMode { None, Linear, Progression };
enum class OracleKind { Cdcl, Enum };

struct StrategyConfig {
    Algorithm algorithm = Algorithm::One;
    ShrinkMode shrink = ShrinkMode::Progression;
    bool disjointCores = false;
    bool stratification = true;
    bool compileLevels = false;
    SolveBudget shrinkBudget = SolveBudget::seconds(10.0);
    OracleKind oracle = OracleKind::Cdcl;
    uint64_t seed = 0;
    std::optional<double> timeoutSeconds;
    int enumAtomCap = 22;

    /// Shrinking is defined inside the core-guided loop only.
    void validate() const {
        if (shrink != ShrinkMode::None && algorithm != Algorithm::One)
            throw StructuralError("core shrinking requires the core-guided algorithm");
    }

    std::string name() const {
        std::string n = algorithm == Algorithm::LinSU ? "linSU" : "one";
        if (shrink == ShrinkMode::Linear) n = "Lshr";
        else if (shrink == ShrinkMode::Progression) n = "Pshr";
        if (disjointCores) n += "+disj";
        if (!stratification) n += "+nostrat";
        if (compileLevels) n += "+lvl1";
        return n;
    }
};

enum class OptStatus { Optimum, Satisfiable, Incoherent, Unknown };

const char* optStatusName(OptStatus s);

struct OptResult {
    OptStatus status;
    std::optional<Interpretation> model; // restricted to the visible atoms
    CostVector cost;                     // of the incumbent model
    CostVector lbVector;                 // per-level lower bounds
};

} // namespace coreshrink

#endif
