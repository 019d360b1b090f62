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

#include "coreshrink/Protocol.h"

#include "coreshrink/Optimizer.h"
#include "coreshrink/Relaxation.h"

#include <ostream>

namespace coreshrink {

ProtocolPrinter::ProtocolPrinter(std::ostream& out, const ParsedInstance& instance,
                                 const WeakConstraintSet& weak)
    : out_(out), instance_(instance) {
    levels_ = weak.levelsDescending();
    singleLevel_ = levels_.size() <= 1;
}

void ProtocolPrinter::boundLine(const AnytimeEvent& e) {
    if (!singleLevel_) return;
    std::optional<int64_t> ub;
    if (e.levelUbFinite) ub = e.levelUb;
    out_ << "e " << epsilon(ub, e.levelLb).text() << "\n";
}

void ProtocolPrinter::onEvent(const AnytimeEvent& e) {
    switch (e.kind) {
        case EventKind::UbImproved:
            out_ << "o " << costVectorText(e.bestCost, levels_) << "\n";
            boundLine(e);
            break;
        case EventKind::LbImproved:
            out_ << "lb " << costVectorText(e.lbVector, levels_) << "\n";
            boundLine(e);
            break;
        default:
            break;
    }
}

void ProtocolPrinter::finish(const OptResult& result) {
    switch (result.status) {
        case OptStatus::Optimum: out_ << "s OPTIMUM FOUND\n"; break;
        case OptStatus::Satisfiable: out_ << "s SATISFIABLE\n"; break;
        case OptStatus::Incoherent: out_ << "s UNSATISFIABLE\n"; break;
        case OptStatus::Unknown: out_ << "s UNKNOWN\n"; break;
    }
    if (result.model) {
        out_ << "v";
        for (int a : *result.model) out_ << " " << instance_.program.atoms.name(a);
        out_ << "\n";
    }
    out_.flush();
}

int exitCode(OptStatus status) {
    switch (status) {
        case OptStatus::Optimum: return 0;
        case OptStatus::Satisfiable: return 10;
        case OptStatus::Incoherent: return 20;
        case OptStatus::Unknown: return 30;
    }
    return 30;
}

int runProtocol(const ParsedInstance& instance, const StrategyConfig& cfg, std::ostream& out,
                const std::atomic<bool>* interrupt, EventSink* extraSink) {
    WeakConstraintSet effective = cfg.compileLevels ? compileLevels(instance.weak) : instance.weak;
    ProtocolPrinter printer(out, instance, effective);
    MultiSink sinks;
    sinks.add(&printer);
    if (extraSink) sinks.add(extraSink);
    OptResult result = optimize(instance, cfg, sinks, interrupt);
    printer.finish(result);
    return exitCode(result.status);
}

} // namespace coreshrink
