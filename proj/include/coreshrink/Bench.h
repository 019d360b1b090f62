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

#ifndef CORESHRINK_BENCH_H
#define CORESHRINK_BENCH_H

#include "Events.h"
#include "Instance.h"
#include "Strategy.h"

#include <map>
#include <string>
#include <vector>

namespace coreshrink {

struct BenchCell {
    std::string path;
    std::optional<SourceDialect> dialect; // overrides sniffing
};

struct BenchOptions {
    std::vector<StrategyConfig> strategies; // empty selects the default matrix
    double timeoutSeconds = 10.0;
    int jobs = 1;
};

struct BenchRow {
    std::string instance;
    std::string strategy;
    std::string status;
    double wallSeconds = 0;
    std::vector<int64_t> ub; // per level, highest first; empty when no model
    std::vector<int64_t> lb;
    std::string epsilonText; // single-level runs only
    RunStats stats;
};

struct BenchSummary {
    // strategy -> (solved, wins), insertion-ordered by strategy list
    std::vector<std::pair<std::string, std::pair<int, int>>> perStrategy;
    bool operator==(const BenchSummary& o) const { return perStrategy == o.perStrategy; }
};

/// The seven strategies reported by the harness: model-guided search and
/// the core-guided one with each shrinking mode, with and without the
/// disjoint-cores pass.
std::vector<StrategyConfig> defaultStrategyMatrix();

/// Manifest: one instance path per line, optional trailing "asp" or "wcnf",
/// "#" comments.
std::vector<BenchCell> readManifest(const std::string& path);

/// Runs every instance under every strategy, up to `jobs` cells in
/// parallel, and renders the versioned CSV document including the summary
/// block. Unreadable instances yield PARSE_ERROR rows.
std::string runBench(const std::vector<BenchCell>& cells, const BenchOptions& options);

std::vector<BenchRow> parseBenchCsv(const std::string& csv);
BenchSummary summarize(const std::vector<BenchRow>& rows, const std::vector<std::string>& strategyOrder);
BenchSummary summaryFromCsv(const std::string& csv);

} // namespace coreshrink

#endif
