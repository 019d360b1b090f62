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

#ifndef CORESHRINK_PROTOCOL_H
#define CORESHRINK_PROTOCOL_H

#include "Events.h"
#include "Instance.h"
#include "Strategy.h"

#include <atomic>
#include <iosfwd>

namespace coreshrink {

// Live output protocol:
//   c <comment>
//   o <cost per level, highest first>     on every upper bound improvement
//   lb <bound per level, highest first>   on every lower bound improvement
//   e <fraction|inf>                      after each bound change, single-level runs
//   s OPTIMUM FOUND | SATISFIABLE | UNSATISFIABLE | UNKNOWN
//   v <visible atoms of the best model>
class ProtocolPrinter : public EventSink {
public:
    ProtocolPrinter(std::ostream& out, const ParsedInstance& instance, const WeakConstraintSet& weak);
    void onEvent(const AnytimeEvent& e) override;
    void finish(const OptResult& result);

private:
    void boundLine(const AnytimeEvent& e);

    std::ostream& out_;
    const ParsedInstance& instance_;
    std::vector<int> levels_;
    bool singleLevel_;
};

/// Exit code of a protocol run: 0 optimum, 10 satisfiable, 20 unsatisfiable,
/// 30 unknown.
int exitCode(OptStatus status);

/// Parses per `dialect`, runs the optimizer, and speaks the protocol on
/// `out`. Extra sinks (statistics, CSV) may be attached.
int runProtocol(const ParsedInstance& instance, const StrategyConfig& cfg, std::ostream& out,
                const std::atomic<bool>* interrupt = nullptr, EventSink* extraSink = nullptr);

} // namespace coreshrink

#endif
