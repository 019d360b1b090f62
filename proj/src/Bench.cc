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

#include "coreshrink/Bench.h"

#include "coreshrink/AspParser.h"
#include "coreshrink/Optimizer.h"
#include "coreshrink/Relaxation.h"
#include "coreshrink/WcnfParser.h"

#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace coreshrink {

std::vector<StrategyConfig> defaultStrategyMatrix() {
    std::vector<StrategyConfig> out;
    StrategyConfig linsu;
    linsu.algorithm = Algorithm::LinSU;
    linsu.shrink = ShrinkMode::None;
    out.push_back(linsu);
    for (bool disjoint : {false, true}) {
        for (ShrinkMode shrink : {ShrinkMode::None, ShrinkMode::Linear, ShrinkMode::Progression}) {
            StrategyConfig cfg;
            cfg.algorithm = Algorithm::One;
            cfg.shrink = shrink;
            cfg.disjointCores = disjoint;
            out.push_back(cfg);
        }
    }
    return out;
}

std::vector<BenchCell> readManifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open bench manifest " + path);
    std::vector<BenchCell> cells;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string file, format;
        if (!(ls >> file) || file[0] == '#') continue;
        BenchCell cell{file, std::nullopt};
        if (ls >> format) {
            if (format == "asp") cell.dialect = SourceDialect::GroundAsp;
            else if (format == "wcnf") cell.dialect = SourceDialect::Wcnf;
            else throw Error("unknown format '" + format + "' in bench manifest");
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open instance " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<int64_t> vectorOf(const CostVector& cv, const std::vector<int>& levels) {
    std::vector<int64_t> out;
    for (int l : levels) out.push_back(cv.get(l));
    return out;
}

std::string joinVector(const std::vector<int64_t>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) os << ";";
        os << v[i];
    }
    return os.str();
}

std::vector<int64_t> splitVector(const std::string& text) {
    std::vector<int64_t> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ';'))
        if (!piece.empty()) out.push_back(std::stoll(piece));
    return out;
}

BenchRow runCell(const BenchCell& cell, const StrategyConfig& strategy, double timeoutSeconds) {
    BenchRow row;
    row.instance = cell.path;
    row.strategy = strategy.name();
    double start = std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
    try {
        std::string text = readFile(cell.path);
        bool wcnf = cell.dialect ? *cell.dialect == SourceDialect::Wcnf : looksLikeWcnf(text);
        ParsedInstance instance = wcnf ? parseWcnf(text) : parseGroundAsp(text);

        StrategyConfig cfg = strategy;
        cfg.timeoutSeconds = timeoutSeconds;
        WeakConstraintSet effective = cfg.compileLevels ? compileLevels(instance.weak) : instance.weak;
        std::vector<int> levels = effective.levelsDescending();

        StatsCollector stats;
        OptResult result;
        try {
            result = optimize(instance, cfg, stats);
        } catch (const UnsupportedFeatureError&) {
            // outside the conflict-driven fragment: fall back to enumeration
            cfg.oracle = OracleKind::Enum;
            result = optimize(instance, cfg, stats);
        }

        row.status = optStatusName(result.status);
        if (result.model) row.ub = vectorOf(result.cost, levels);
        row.lb = vectorOf(result.lbVector, levels);
        if (levels.size() <= 1) {
            int level = levels.empty() ? 1 : levels[0];
            std::optional<int64_t> ub;
            if (result.model) ub = result.cost.get(level);
            if (result.status != OptStatus::Incoherent)
                row.epsilonText = epsilon(ub, result.lbVector.get(level)).text();
        }
        row.stats = stats.stats();
    } catch (const Error&) {
        row.status = "PARSE_ERROR";
    }
    double end = std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
    row.wallSeconds = end - start;
    return row;
}

bool terminated(const BenchRow& row) {
    return row.status == "OPTIMUM" || row.status == "UNSATISFIABLE";
}

} // namespace

BenchSummary summarize(const std::vector<BenchRow>& rows, const std::vector<std::string>& strategyOrder) {
    std::map<std::string, std::pair<int, int>> tally;
    for (const auto& s : strategyOrder) tally[s] = {0, 0};

    std::vector<std::string> instances;
    for (const auto& r : rows)
        if (std::find(instances.begin(), instances.end(), r.instance) == instances.end())
            instances.push_back(r.instance);

    for (const auto& inst : instances) {
        std::vector<const BenchRow*> group;
        for (const auto& r : rows)
            if (r.instance == inst) group.push_back(&r);

        bool anyTerminated = false;
        for (const BenchRow* r : group)
            if (terminated(*r)) {
                anyTerminated = true;
                tally[r->strategy].first++;
                tally[r->strategy].second++;
            }
        if (anyTerminated) continue;

        // nobody finished: the smallest upper bound wins, ties included
        const std::vector<int64_t>* bestUb = nullptr;
        for (const BenchRow* r : group) {
            if (r->ub.empty()) continue;
            if (!bestUb || r->ub < *bestUb) bestUb = &r->ub;
        }
        if (!bestUb) continue;
        for (const BenchRow* r : group)
            if (!r->ub.empty() && r->ub == *bestUb) tally[r->strategy].second++;
    }

    BenchSummary summary;
    for (const auto& s : strategyOrder) summary.perStrategy.push_back({s, tally[s]});
    return summary;
}

std::string runBench(const std::vector<BenchCell>& cells, const BenchOptions& options) {
    std::vector<StrategyConfig> strategies =
        options.strategies.empty() ? defaultStrategyMatrix() : options.strategies;

    struct Task {
        const BenchCell* cell;
        const StrategyConfig* strategy;
    };
    std::vector<Task> tasks;
    for (const auto& cell : cells)
        for (const auto& s : strategies) tasks.push_back({&cell, &s});

    std::vector<BenchRow> rows(tasks.size());
    std::mutex cursorMutex;
    size_t cursor = 0;
    auto worker = [&]() {
        for (;;) {
            size_t mine;
            {
                std::lock_guard<std::mutex> lock(cursorMutex);
                if (cursor >= tasks.size()) return;
                mine = cursor++;
            }
            rows[mine] = runCell(*tasks[mine].cell, *tasks[mine].strategy, options.timeoutSeconds);
        }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; i++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<std::string> strategyOrder;
    for (const auto& s : strategies) strategyOrder.push_back(s.name());
    BenchSummary summary = summarize(rows, strategyOrder);

    std::ostringstream os;
    os << "# coreshrink-csv v1\n";
    os << "# wins: terminated runs win; when none terminates the smallest final upper bound wins,"
          " ties counting for every tied strategy\n";
    os << "instance,strategy,status,wall_s,ub,lb,epsilon,cores,core_lits_before,core_lits_after,"
          "shrink_calls,budget_hits,models\n";
    for (const auto& r : rows) {
        char wall[32];
        snprintf(wall, sizeof(wall), "%.3f", r.wallSeconds);
        os << r.instance << "," << r.strategy << "," << r.status << "," << wall << ","
           << joinVector(r.ub) << "," << joinVector(r.lb) << "," << r.epsilonText << ","
           << r.stats.coresFound << "," << r.stats.coreLitsBefore << "," << r.stats.coreLitsAfter << ","
           << r.stats.shrinkCalls << "," << r.stats.budgetHits << "," << r.stats.modelsFound << "\n";
    }
    os << "# summary,strategy,solved,wins\n";
    for (const auto& [name, counts] : summary.perStrategy)
        os << "# summary," << name << "," << counts.first << "," << counts.second << "\n";
    return os.str();
}

std::vector<BenchRow> parseBenchCsv(const std::string& csv) {
    std::vector<BenchRow> rows;
    std::istringstream in(csv);
    std::string line;
    bool headerSeen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!headerSeen) { headerSeen = true; continue; }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() < 13) throw Error("malformed bench csv row: " + line);
        BenchRow r;
        r.instance = fields[0];
        r.strategy = fields[1];
        r.status = fields[2];
        r.wallSeconds = std::stod(fields[3]);
        r.ub = splitVector(fields[4]);
        r.lb = splitVector(fields[5]);
        r.epsilonText = fields[6];
        r.stats.coresFound = std::stoll(fields[7]);
        r.stats.coreLitsBefore = std::stoll(fields[8]);
        r.stats.coreLitsAfter = std::stoll(fields[9]);
        r.stats.shrinkCalls = std::stoll(fields[10]);
        r.stats.budgetHits = std::stoll(fields[11]);
        r.stats.modelsFound = std::stoll(fields[12]);
        rows.push_back(std::move(r));
    }
    return rows;
}

BenchSummary summaryFromCsv(const std::string& csv) {
    std::vector<BenchRow> rows = parseBenchCsv(csv);
    std::vector<std::string> order;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# summary,", 0) != 0) continue;
        std::istringstream ls(line.substr(10));
        std::string name;
        if (std::getline(ls, name, ',') && name != "strategy") order.push_back(name);
    }
    return summarize(rows, order);
}

} // namespace coreshrink
