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

#include "coreshrink/AspParser.h"
#include "coreshrink/Bench.h"
#include "coreshrink/Protocol.h"
#include "coreshrink/WcnfParser.h"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace coreshrink;

namespace {

std::atomic<bool> interruptRequested{false};
void onSigint(int) { interruptRequested.store(true); }

std::string readInput(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SolveBudget parseBudget(const std::string& text) {
    if (text.size() < 2) throw Error("budget must look like 10s or 5000c");
    char unit = text.back();
    int64_t amount = std::stoll(text.substr(0, text.size() - 1));
    if (amount <= 0) throw Error("budget must be positive");
    if (unit == 's') return SolveBudget::seconds(static_cast<double>(amount));
    if (unit == 'c') return SolveBudget::effort(amount);
    throw Error("budget unit must be s (seconds) or c (conflicts/checks)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coreshrink - anytime optimization of ground logic programs with weak constraints"};
    app.get_formatter()->column_width(34);

    std::string inputPath;
    std::string format = "auto";
    std::string algorithm = "one";
    std::string shrink;
    bool disjointCores = false;
    bool noStratification = false;
    bool compileLevelsFlag = false;
    std::string shrinkBudget = "10s";
    std::string oracleName = "cdcl";
    uint64_t seed = 0;
    double timeout = 0;
    std::string eventsCsv;
    std::string benchManifest;
    int jobs = 1;

    app.add_option("input", inputPath, "Instance file; stdin when omitted or '-'");
    app.add_option("--format", format, "Input dialect: asp, wcnf, or auto")
        ->check(CLI::IsMember({"asp", "wcnf", "auto"}));
    app.add_option("--algorithm", algorithm, "Search algorithm: one (core guided) or linsu")
        ->check(CLI::IsMember({"one", "linsu"}));
    app.add_option("--shrink", shrink, "Core shrinking: none, linear, or progression (default progression for one)")
        ->check(CLI::IsMember({"none", "linear", "progression"}));
    app.add_flag("--disjoint-cores", disjointCores, "Run the disjoint cores pass per stratum");
    app.add_flag("--no-stratification", noStratification, "Assume all soft literals at once");
    app.add_flag("--compile-levels", compileLevelsFlag, "Fold all levels into level 1 by weight scaling");
    app.add_option("--shrink-budget", shrinkBudget, "Budget per shrink probe: <N>s wall clock or <N>c conflicts");
    app.add_option("--oracle", oracleName, "Oracle backend: cdcl or enum")
        ->check(CLI::IsMember({"cdcl", "enum"}));
    app.add_option("--seed", seed, "Decision heuristic seed");
    app.add_option("--timeout", timeout, "Overall wall-clock limit in seconds");
    app.add_option("--events-csv", eventsCsv, "Write the anytime event log to this CSV file");
    app.add_option("--bench", benchManifest, "Run the benchmark matrix over a manifest of instances");
    app.add_option("--jobs", jobs, "Parallel bench workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!benchManifest.empty()) {
            BenchOptions options;
            options.jobs = jobs;
            if (timeout > 0) options.timeoutSeconds = timeout;
            std::cout << runBench(readManifest(benchManifest), options);
            return 0;
        }

        StrategyConfig cfg;
        cfg.algorithm = algorithm == "linsu" ? Algorithm::LinSU : Algorithm::One;
        if (shrink.empty()) {
            cfg.shrink = cfg.algorithm == Algorithm::One ? ShrinkMode::Progression : ShrinkMode::None;
        } else if (cfg.algorithm == Algorithm::LinSU && shrink != "none") {
            std::cerr << "error: --shrink applies to --algorithm one only\n";
            return 2;
        } else {
            cfg.shrink = shrink == "linear"        ? ShrinkMode::Linear
                         : shrink == "progression" ? ShrinkMode::Progression
                                                   : ShrinkMode::None;
        }
        cfg.disjointCores = disjointCores;
        cfg.stratification = !noStratification;
        cfg.compileLevels = compileLevelsFlag;
        cfg.shrinkBudget = parseBudget(shrinkBudget);
        cfg.oracle = oracleName == "enum" ? OracleKind::Enum : OracleKind::Cdcl;
        cfg.seed = seed;
        if (timeout > 0) cfg.timeoutSeconds = timeout;

        std::string text = readInput(inputPath);
        bool wcnf = format == "wcnf" || (format == "auto" && looksLikeWcnf(text));
        ParsedInstance instance = wcnf ? parseWcnf(text) : parseGroundAsp(text);

        std::signal(SIGINT, onSigint);

        std::unique_ptr<CsvEventWriter> csv;
        if (!eventsCsv.empty()) csv = std::make_unique<CsvEventWriter>(eventsCsv);
        int code = runProtocol(instance, cfg, std::cout, &interruptRequested, csv.get());
        if (csv && csv->failed()) {
            // the search itself is unaffected; the exit status flags the
            // missing event log
            std::cerr << "error: event log " << eventsCsv << " could not be written\n";
            return 2;
        }
        return code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
