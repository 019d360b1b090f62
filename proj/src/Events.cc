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

#include "coreshrink/Events.h"

#include <cassert>
#include <fstream>
#include <numeric>
#include <sstream>

namespace coreshrink {

Rational Rational::of(int64_t n, int64_t d) {
    assert(d > 0 && n >= 0);
    int64_t g = std::gcd(n, d);
    return {n / g, d / g, false};
}

std::string Rational::text() const {
    if (infinite) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Rational::percent() const {
    if (infinite) return "inf";
    double v = 100.0 * static_cast<double>(num) / static_cast<double>(den);
    char buf[64];
    snprintf(buf, sizeof(buf), "%.2f%%", v);
    return buf;
}

Rational epsilon(std::optional<int64_t> ub, int64_t lb) {
    assert(lb >= 0);
    if (!ub.has_value()) return Rational::inf();
    assert(*ub >= lb);
    if (lb == 0) return *ub == 0 ? Rational::of(0, 1) : Rational::inf();
    return Rational::of(*ub - lb, lb);
}

const char* eventKindName(EventKind k) {
    switch (k) {
        case EventKind::UbImproved: return "UB_IMPROVED";
        case EventKind::LbImproved: return "LB_IMPROVED";
        case EventKind::Model: return "MODEL";
        case EventKind::CoreFound: return "CORE_FOUND";
        case EventKind::CoreShrunk: return "CORE_SHRUNK";
        case EventKind::BudgetHit: return "BUDGET_HIT";
        case EventKind::Stratum: return "STRATUM";
        case EventKind::LevelDone: return "LEVEL_DONE";
        case EventKind::Final: return "FINAL";
    }
    return "?";
}

void StatsCollector::onEvent(const AnytimeEvent& e) {
    switch (e.kind) {
        case EventKind::CoreFound:
            stats_.coresFound++;
            stats_.coreLitsBefore += e.coreSize;
            stats_.coreLitsAfter += e.coreSize;
            break;
        case EventKind::CoreShrunk:
            assert(e.coreSizeAfter <= e.coreSize);
            stats_.coreLitsAfter -= e.coreSize - e.coreSizeAfter;
            stats_.shrinkCalls += e.shrinkCalls;
            break;
        case EventKind::BudgetHit:
            stats_.budgetHits++;
            break;
        case EventKind::Model:
            stats_.modelsFound++;
            break;
        case EventKind::Final:
            stats_.wallTime = e.at;
            break;
        default:
            break;
    }
}

std::string costVectorText(const CostVector& cv, const std::vector<int>& levelsDescending) {
    if (levelsDescending.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < levelsDescending.size(); i++) {
        if (i > 0) os << " ";
        os << cv.get(levelsDescending[i]);
    }
    return os.str();
}

struct CsvEventWriter::Out {
    std::ofstream stream;
};

CsvEventWriter::CsvEventWriter(std::string path) : out_(std::make_unique<Out>()) {
    out_->stream.open(path);
    if (!out_->stream) {
        failed_ = true;
        return;
    }
    out_->stream << "# coreshrink-csv v1\n";
    out_->stream << "at,kind,level,best_cost,lb,level_ub,level_lb,core_size,core_after,shrink_calls,stratum\n";
}

CsvEventWriter::~CsvEventWriter() = default;

void CsvEventWriter::onEvent(const AnytimeEvent& e) {
    if (failed_) return;
    std::vector<int> levels;
    for (const auto& [l, v] : e.bestCost.perLevel) levels.push_back(l);
    for (const auto& [l, v] : e.lbVector.perLevel)
        if (std::find(levels.begin(), levels.end(), l) == levels.end()) levels.push_back(l);
    std::sort(levels.rbegin(), levels.rend());

    char buf[32];
    snprintf(buf, sizeof(buf), "%.6f", e.at);
    out_->stream << buf << "," << eventKindName(e.kind) << "," << e.level << ","
                 << (e.hasModel ? costVectorText(e.bestCost, levels) : "") << ","
                 << costVectorText(e.lbVector, levels) << ","
                 << (e.levelUbFinite ? std::to_string(e.levelUb) : "inf") << "," << e.levelLb << ","
                 << e.coreSize << "," << e.coreSizeAfter << "," << e.shrinkCalls << "," << e.stratumWeight
                 << "\n";
    if (!out_->stream) failed_ = true;
}

} // namespace coreshrink
