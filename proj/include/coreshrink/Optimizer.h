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

#ifndef CORESHRINK_OPTIMIZER_H
#define CORESHRINK_OPTIMIZER_H

#include "Events.h"
#include "Instance.h"
#include "Strategy.h"

#include <atomic>
#include <functional>

namespace coreshrink {

/// Runs the configured search to the optimum, a timeout, or an interrupt,
/// streaming bound improvements, models, cores, and shrink activity into
/// the sink. A run is strictly sequential; concurrent runs need their own
/// instances and sinks.
OptResult optimize(const ParsedInstance& instance, const StrategyConfig& cfg, EventSink& sink,
                   const std::atomic<bool>* interrupt = nullptr);

/// Budgeted prefix probing of an unsatisfiable core: each probe either
/// finds a smaller core, a model, or burns its budget while the
/// progression advances regardless. `mode` picks between doubling the
/// probe growth and incrementing it. Every verdict is surfaced through
/// `onVerdict` before the progression advances; `probeCount` receives the
/// number of budgeted calls.
AssumptionSet shrinkCoreSearch(Oracle& oracle, AssumptionSet core, ShrinkMode mode,
                               const SolveBudget& budget,
                               const std::function<void(const OracleVerdict&)>& onVerdict,
                               int64_t* probeCount = nullptr);

} // namespace coreshrink

#endif
