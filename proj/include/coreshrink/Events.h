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

#ifndef CORESHRINK_EVENTS_H
#define CORESHRINK_EVENTS_H

#include "WeakConstraints.h"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coreshrink {

/// Exact nonnegative rational, plus infinity.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    bool infinite = false;

    static Rational inf() { return {0, 1, true}; }
    static Rational of(int64_t n, int64_t d);

    std::string text() const;      // "inf", "0", "1/2"
    std::string percent() const;   // "inf" or two decimals
    bool operator==(const Rational& o) const {
        return infinite == o.infinite && (infinite || (num == o.num && den == o.den));
    }
    bool operator<(const Rational& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return num * o.den < o.num * den;
    }
};

/// The estimate error of the current bounds: how far the reported model
/// can be from the optimum, relative to the lower bound.
Rational epsilon(std::optional<int64_t> ub, int64_t lb);

enum class EventKind {
    UbImproved,
    LbImproved,
    Model,
    CoreFound,
    CoreShrunk,
    BudgetHit,
    Stratum,
    LevelDone,
    Final
};

const char* eventKindName(EventKind k);

struct AnytimeEvent {
    double at = 0; // seconds since run start
    EventKind kind;
    int level = 0;

    bool hasModel = false;
    CostVector bestCost; // of the incumbent model, all levels
    CostVector lbVector; // current lower bounds, all levels

    bool levelUbFinite = false;
    int64_t levelUb = 0;
    int64_t levelLb = 0;

    int64_t coreSize = 0;
    int64_t coreSizeAfter = 0;
    int64_t shrinkCalls = 0;
    int64_t stratumWeight = 0;
};

class EventSink {
public:
    virtual ~EventSink() = default;
    virtual void onEvent(const AnytimeEvent& e) = 0;
};

class NullSink : public EventSink {
public:
    void onEvent(const AnytimeEvent&) override {}
};

class MultiSink : public EventSink {
public:
    void add(EventSink* sink) { sinks_.push_back(sink); }
    void onEvent(const AnytimeEvent& e) override {
        for (EventSink* s : sinks_) s->onEvent(e);
    }

private:
    std::vector<EventSink*> sinks_;
};

struct RunStats {
    int64_t coresFound = 0;
    int64_t coreLitsBefore = 0;
    int64_t coreLitsAfter = 0;
    int64_t shrinkCalls = 0;
    int64_t budgetHits = 0;
    int64_t modelsFound = 0;
    double wallTime = 0;
};

/// Accumulates run statistics from the event stream. The analyzed size of
/// a core defaults to its found size until a shrink event revises it.
class StatsCollector : public EventSink {
public:
    void onEvent(const AnytimeEvent& e) override;
    const RunStats& stats() const { return stats_; }

private:
    RunStats stats_;
};

/// Event log in CSV form, one row per event. Not required to be loss-free;
/// the bench harness owns the replayable format.
class CsvEventWriter : public EventSink {
public:
    explicit CsvEventWriter(std::string path);
    ~CsvEventWriter() override;
    void onEvent(const AnytimeEvent& e) override;
    bool failed() const { return failed_; }

private:
    struct Out;
    std::unique_ptr<Out> out_;
    bool failed_ = false;
};

std::string costVectorText(const CostVector& cv, const std::vector<int>& levelsDescending);

} // namespace coreshrink

#endif
