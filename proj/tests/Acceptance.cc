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

// End-to-end acceptance checks, one line of output per criterion.

#include "coreshrink/AspParser.h"
#include "coreshrink/Bench.h"
#include "coreshrink/EnumOracle.h"
#include "coreshrink/Optimizer.h"
#include "coreshrink/Protocol.h"
#include "coreshrink/Relaxation.h"
#include "coreshrink/Semantics.h"
#include "coreshrink/WcnfParser.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace coreshrink;

namespace {

struct CheckFailure {
    std::string what;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw CheckFailure{what};
}

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

const char* kProgram1 =
    "a | c :- not b, not d.\n"
    "a :- not b, c.\n"
    "c :- a, b.\n"
    "b :- a, c.\n"
    "d :- not not d.\n";

const char* kWeak1 =
    ":~ d. [1@2]\n:~ a. [2@1]\n:~ b. [2@1]\n:~ c. [1@1]\n";

const char* kWeak2 =
    ":~ d. [1@1]\n:~ a. [1@1]\n:~ b. [1@1]\n:~ c. [1@1]\n";

const char* kRelaxedBoth =
    "a | c :- not b, not d.\n"
    "a :- not b, c.\n"
    "c :- a, b.\n"
    "b :- a, c.\n"
    "d :- not not d.\n"
    ":- d, s1.\n:- a, s2.\n:- b, s3.\n:- c, s4.\n"
    "s1 :- not not s1.\ns2 :- not not s2.\ns3 :- not not s3.\ns4 :- not not s4.\n";

int atomOf(const ParsedInstance& inst, const std::string& name) {
    int id = inst.program.atoms.find(name);
    require(id >= 0, "atom " + name + " missing");
    return id;
}

Interpretation interpOf(const ParsedInstance& inst, const std::vector<std::string>& names) {
    std::vector<int> atoms;
    for (const auto& n : names) atoms.push_back(atomOf(inst, n));
    return Interpretation(std::move(atoms));
}

struct Recorder : EventSink {
    std::vector<AnytimeEvent> events;
    void onEvent(const AnytimeEvent& e) override { events.push_back(e); }
};

// same fragment the randomized differential suites use: normal rules,
// choice rules, constraints with optional count aggregates
std::string randomInstanceText(std::mt19937& rng, int atoms, int rules, int weakCount, int maxLevel,
                               int64_t maxWeight) {
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };
    auto atomName = [&](int i) { return "p" + std::to_string(i); };
    std::ostringstream os;
    auto literalText = [&]() {
        int depth = pick(4) == 0 ? (pick(2) == 0 ? 2 : 1) : (pick(2) == 0 ? 1 : 0);
        std::string s;
        for (int i = 0; i < depth; i++) s += "not ";
        return s + atomName(pick(atoms));
    };
    for (int i = 0; i < rules; i++) {
        int kind = pick(10);
        if (kind < 2) {
            os << atomName(pick(atoms)) << ".\n";
        } else if (kind < 4) {
            int a = pick(atoms);
            os << atomName(a) << " :- not not " << atomName(a) << ".\n";
        } else if (kind < 7) {
            os << atomName(pick(atoms)) << " :- " << literalText();
            if (pick(2) == 0) os << ", " << literalText();
            os << ".\n";
        } else if (kind == 7) {
            int m = 1 + pick(3);
            os << ":- count{ ";
            for (int j = 0; j < m; j++) os << (j ? ", " : "") << literalText();
            static const char* rels[] = {"<", "<=", ">=", ">", "=", "!="};
            os << " } " << rels[pick(6)] << " " << pick(m + 1) << ".\n";
        } else {
            os << ":- " << literalText();
            if (pick(2) == 0) os << ", " << literalText();
            os << ".\n";
        }
    }
    for (int i = 0; i < weakCount; i++) {
        os << ":~ " << literalText();
        if (pick(2) == 0) os << ", " << literalText();
        os << ". [" << 1 + pick(static_cast<int>(maxWeight)) << "@" << 1 + pick(maxLevel) << "]\n";
    }
    return os.str();
}

std::vector<StrategyConfig> strategyMatrix(OracleKind oracle) {
    std::vector<StrategyConfig> out;
    StrategyConfig linsu;
    linsu.algorithm = Algorithm::LinSU;
    linsu.shrink = ShrinkMode::None;
    linsu.oracle = oracle;
    out.push_back(linsu);
    for (bool disjoint : {false, true})
        for (ShrinkMode shrink : {ShrinkMode::None, ShrinkMode::Linear, ShrinkMode::Progression}) {
            StrategyConfig cfg;
            cfg.algorithm = Algorithm::One;
            cfg.shrink = shrink;
            cfg.disjointCores = disjoint;
            cfg.oracle = oracle;
            cfg.shrinkBudget = SolveBudget::effort(1 << 16);
            out.push_back(cfg);
        }
    StrategyConfig compiled = out.back();
    compiled.compileLevels = true;
    out.push_back(compiled);
    return out;
}

// ------------------------------------------------------------------ criteria

void criterion1() {
    double start = now();
    ParsedInstance inst = parseGroundAsp(kProgram1);
    EnumOracle oracle(inst.program);
    std::vector<Interpretation> models = oracle.enumerateStable();
    require(models.size() == 2, "expected exactly two stable models");
    require(models[0] == interpOf(inst, {"a"}), "first stable model is {a}");
    require(models[1] == interpOf(inst, {"d"}), "second stable model is {d}");

    auto stripped = [](const Rule& r) {
        std::vector<BodyElement> body;
        for (const auto& e : r.body)
            if (!(isLiteral(e) && isTop(asLiteral(e)))) body.push_back(e);
        return body;
    };
    Program redA = reduct(inst.program, models[0]);
    require(redA.rules.size() == 1, "reduct of {a} has one rule");
    require(redA.rules[0].head == std::vector<int>{atomOf(inst, "a"), atomOf(inst, "c")},
            "reduct of {a} keeps the disjunctive head");
    require(stripped(redA.rules[0]).empty(), "reduct of {a} has an empty body");

    Program redD = reduct(inst.program, models[1]);
    require(redD.rules.size() == 1, "reduct of {d} has one rule");
    require(redD.rules[0].head == std::vector<int>{atomOf(inst, "d")}, "reduct of {d} keeps d");
    require(stripped(redD.rules[0]).empty(), "reduct of {d} has an empty body");
    require(now() - start < 1.0, "criterion must finish within a second");
}

void criterion2() {
    double start = now();
    ParsedInstance inst = parseGroundAsp(std::string(kProgram1) + kWeak1);
    CostVector expected;
    expected.set(2, 0);
    expected.set(1, 2);

    int combinations = 0;
    for (StrategyConfig base : strategyMatrix(OracleKind::Enum)) {
        for (bool stratification : {true, false}) {
            StrategyConfig cfg = base;
            cfg.stratification = stratification;
            NullSink sink;
            OptResult r = optimize(inst, cfg, sink);
            require(r.status == OptStatus::Optimum, cfg.name() + ": optimum expected");
            require(r.model.has_value() && *r.model == interpOf(inst, {"a"}),
                    cfg.name() + ": optimum model is {a}");
            require(costVector(inst.weak, *r.model) == expected, cfg.name() + ": cost vector (0, 2)");
            if (!cfg.compileLevels)
                require(r.cost == expected && r.lbVector == expected, cfg.name() + ": reported bounds");
            combinations++;
        }
    }
    require(combinations == 16, "all strategy combinations exercised");
    require(now() - start < 1.0, "criterion must finish within a second");
}

void criterion3() {
    ParsedInstance inst = parseGroundAsp(kRelaxedBoth);
    EnumOracle oracle(inst.program, CoreMode::Minimal);
    AssumptionSet s;
    for (const char* n : {"s1", "s2", "s3", "s4"}) s.atoms.push_back(atomOf(inst, n));
    OracleVerdict v = oracle.solve(s);
    require(v.status == SolveStatus::Incoherent, "assumptions are jointly unsatisfiable");
    require(v.core->atoms == std::vector<int>{atomOf(inst, "s1"), atomOf(inst, "s2")},
            "the minimal core is exactly {s1, s2}");
}

void criterion4() {
    // the raw core is the full soft set, in registration order
    ParsedInstance work = parseGroundAsp(std::string(kProgram1) + kWeak2);
    SoftRegistry registry;
    RelaxationOutput relaxed = relaxLevel(work.weak, 1, work.program, registry);
    require(relaxed.softAtoms.size() == 4, "four soft literals");

    EnumOracle oracle(work.program, CoreMode::Raw);
    OracleVerdict v = oracle.solve(AssumptionSet{relaxed.softAtoms});
    require(v.status == SolveStatus::Incoherent, "first solve refutes");
    require(v.core->atoms == relaxed.softAtoms, "the first core is all four soft literals");

    // its relaxation adds exactly three choices, two symmetry breakers,
    // and one count constraint over seven literals bounded by three
    RelaxationOutput out = relaxCore(*v.core, 1, work.program, registry);
    int choices = 0, breakers = 0, counts = 0;
    for (const auto& r : out.addedRules) {
        if (r.isChoice()) choices++;
        else if (r.body.size() == 2 && isLiteral(r.body[0]) && isLiteral(r.body[1]) &&
                 asLiteral(r.body[0]).depth == 0 && asLiteral(r.body[1]).depth == 1)
            breakers++;
        else if (r.body.size() == 1 && !isLiteral(r.body[0]))
            counts++;
    }
    require(out.softAtoms.size() == 3, "three fresh soft literals");
    require(choices == 3 && breakers == 2 && counts == 1, "relaxation rule shapes");
    const Aggregate& count = asAggregate(out.addedRules.back().body[0]);
    require(count.isCount() && count.rel == Rel::Lt && count.bound == 3 && count.elements.size() == 7,
            "count constraint over the core and the new soft literals");

    // the full run ends with lb = ub = 1
    ParsedInstance inst = parseGroundAsp(std::string(kProgram1) + kWeak2);
    StrategyConfig cfg;
    cfg.algorithm = Algorithm::One;
    cfg.shrink = ShrinkMode::None;
    cfg.oracle = OracleKind::Enum;
    Recorder rec;
    OptResult r = optimize(inst, cfg, rec);
    require(r.status == OptStatus::Optimum, "uniform example reaches the optimum");
    require(r.cost.get(1) == 1 && r.lbVector.get(1) == 1, "lb = ub = 1");
    bool firstCoreSeen = false;
    for (const auto& e : rec.events)
        if (e.kind == EventKind::CoreFound) {
            require(!firstCoreSeen && e.coreSize == 4, "one core of size four");
            firstCoreSeen = true;
        }
    require(firstCoreSeen, "the run analyzed a core");
}

void criterion5() {
    ParsedInstance twin = parseGroundAsp(kRelaxedBoth);
    EnumOracle measure(twin.program);
    auto effortOf = [&](const std::vector<std::string>& names) {
        AssumptionSet s;
        for (const auto& n : names) s.atoms.push_back(atomOf(twin, n));
        return measure.solve(s).effort;
    };
    int64_t coherentProbe = effortOf({"s1"});
    int64_t refuteTwo = effortOf({"s1", "s2"});
    int64_t refuteThree = effortOf({"s1", "s2", "s3"});
    require(coherentProbe < refuteThree && refuteThree < refuteTwo, "probe efforts are separable");

    struct RecordingOracle : Oracle {
        EnumOracle inner;
        std::vector<size_t> probeSizes;
        explicit RecordingOracle(const Program& p) : inner(p, CoreMode::Raw) {}
        void addRule(const Rule& r) override { inner.addRule(r); }
        OracleVerdict solve(const AssumptionSet& s) override { return inner.solve(s); }
        OracleVerdict solveWithBudget(const AssumptionSet& s, const SolveBudget& b) override {
            probeSizes.push_back(s.size());
            return inner.solveWithBudget(s, b);
        }
    };

    ParsedInstance fresh = parseGroundAsp(kRelaxedBoth);
    std::vector<int> core;
    for (const char* n : {"s1", "s2", "s3", "s4"}) core.push_back(atomOf(fresh, n));

    auto shrinkWith = [&](int64_t budget) {
        RecordingOracle oracle(fresh.program);
        AssumptionSet result = shrinkCoreSearch(oracle, AssumptionSet{core}, ShrinkMode::Progression,
                                                SolveBudget::effort(budget), [](const OracleVerdict&) {});
        return std::make_pair(result.atoms, oracle.probeSizes);
    };

    auto [ample, ampleSizes] = shrinkWith(refuteTwo + 1);
    require(ampleSizes == std::vector<size_t>{1, 2}, "ample budget probes prefixes of sizes 1 then 2");
    require(ample == std::vector<int>{core[0], core[1]}, "ample budget returns {s1, s2}");

    auto [reiterated, reiteratedSizes] = shrinkWith(refuteThree);
    require(reiteratedSizes == std::vector<size_t>{1, 2, 3}, "the killed probe reiterates to size 3");
    require(reiterated == std::vector<int>{core[0], core[1], core[2]},
            "the reiteration path returns {s1, s2, s3}");

    auto [kept, keptSizes] = shrinkWith(coherentProbe);
    require(keptSizes.size() == 3, "the tiny budget still makes three probes");
    require(kept == core, "the tiny budget keeps the original core");

    // determinism under effort budgets
    auto second = shrinkWith(refuteThree);
    require(second.first == reiterated && second.second == reiteratedSizes,
            "byte-identical rerun under the same budget");
}

void criterion6() {
    double start = now();
    struct MockUnknownOracle : Oracle {
        int64_t calls = 0;
        void addRule(const Rule&) override {}
        OracleVerdict solve(const AssumptionSet&) override { return OracleVerdict::unknown(); }
        OracleVerdict solveWithBudget(const AssumptionSet&, const SolveBudget&) override {
            calls++;
            return OracleVerdict::unknown();
        }
    };
    for (int size : {2, 4, 8, 16, 32, 64}) {
        AssumptionSet core;
        for (int i = 0; i < size; i++) core.atoms.push_back(i + 1);
        int k = 0;
        while ((1 << k) < size) k++;

        MockUnknownOracle progression;
        shrinkCoreSearch(progression, core, ShrinkMode::Progression, SolveBudget::effort(1),
                         [](const OracleVerdict&) {});
        require(progression.calls <= k * (k + 1) / 2,
                "progression bound at size " + std::to_string(size) + ": " +
                    std::to_string(progression.calls) + " calls");

        MockUnknownOracle linear;
        shrinkCoreSearch(linear, core, ShrinkMode::Linear, SolveBudget::effort(1),
                         [](const OracleVerdict&) {});
        require(linear.calls <= size, "linear bound at size " + std::to_string(size) + ": " +
                                          std::to_string(linear.calls) + " calls");
    }
    require(now() - start < 5.0, "criterion must finish within five seconds");
}

void criterion7() {
    require(epsilon(0, 0) == Rational::of(0, 1), "ub = lb = 0 gives 0");
    require(epsilon(std::nullopt, 0) == Rational::inf(), "ub = infinity gives infinity");
    require(epsilon(std::nullopt, 9) == Rational::inf(), "ub = infinity gives infinity");
    require(epsilon(3, 0) == Rational::inf(), "positive ub over lb = 0 gives infinity");
    require(epsilon(3, 2) == Rational::of(1, 2), "(3,2) gives exactly 1/2");
    require(epsilon(7, 7) == Rational::of(0, 1), "tight bounds give 0");

    std::mt19937 rng(4242);
    for (int round = 0; round < 10000; round++) {
        int64_t lb = rng() % 40;
        int64_t ub = lb + rng() % 40;
        Rational base = epsilon(ub, lb);
        Rational higherUb = epsilon(ub + 1 + rng() % 9, lb);
        require(base < higherUb || base == higherUb, "nondecreasing in ub");
        if (lb >= 1) {
            int64_t lower = static_cast<int64_t>(rng() % lb);
            Rational lowerLb = epsilon(ub, lower);
            require(base < lowerLb || base == lowerLb, "nonincreasing in lb");
        }
    }
}

void criterion8() {
    double start = now();
    std::mt19937 rng(52025);
    int instances = 0;
    int coherent = 0;
    int positiveCost = 0;
    for (int round = 0; round < 500; round++) {
        int atoms = 5 + static_cast<int>(rng() % 3);
        int rules = 6 + static_cast<int>(rng() % 7);
        int weakCount = 1 + static_cast<int>(rng() % 4);
        ParsedInstance inst =
            parseGroundAsp(randomInstanceText(rng, atoms, rules, weakCount, 3, 4));
        instances++;

        EnumOracle reference(inst.program);
        auto expected = reference.optimumOracle(inst.weak);
        if (expected) {
            coherent++;
            for (const auto& [level, value] : expected->first.perLevel)
                if (value > 0) { positiveCost++; break; }
        }

        for (OracleKind oracle : {OracleKind::Enum, OracleKind::Cdcl}) {
            for (const StrategyConfig& cfg : strategyMatrix(oracle)) {
                Recorder rec;
                OptResult r = optimize(inst, cfg, rec);
                if (!expected) {
                    require(r.status == OptStatus::Incoherent, cfg.name() + ": incoherence agreed");
                    continue;
                }
                require(r.status == OptStatus::Optimum, cfg.name() + ": optimum reached");
                require(costVector(inst.weak, *r.model) == expected->first,
                        cfg.name() + ": optimum cost vector agreed");

                WeakConstraintSet effective =
                    cfg.compileLevels ? compileLevels(inst.weak) : inst.weak;
                EnumOracle scaledRef(inst.program);
                auto scaled = scaledRef.optimumOracle(effective);
                for (const auto& e : rec.events) {
                    if (e.kind == EventKind::UbImproved)
                        require(e.bestCost.get(e.level) >= scaled->first.get(e.level),
                                "upper bounds stay above the optimum");
                    if (e.kind == EventKind::LbImproved)
                        require(e.lbVector.get(e.level) <= scaled->first.get(e.level),
                                "lower bounds stay below the optimum");
                }
            }
        }
    }
    double elapsed = now() - start;
    require(instances >= 500, "at least 500 instances");
    require(coherent >= 150, "a meaningful share of coherent instances");
    require(positiveCost >= 80, "a meaningful share of nonzero optima");
    require(elapsed < 120.0, "criterion must finish within two minutes, took " +
                                 std::to_string(elapsed) + "s");
}

void criterion9() {
    std::mt19937 rng(90210);
    int multiLevel = 0;
    for (int round = 0; round < 400 && multiLevel < 120; round++) {
        ParsedInstance inst = parseGroundAsp(randomInstanceText(rng, 5, 7, 3, 3, 4));
        if (inst.weak.levelsDescending().size() < 2) continue;
        multiLevel++;

        EnumOracle oracle(inst.program);
        std::vector<Interpretation> models = oracle.enumerateStable();
        WeakConstraintSet flat = compileLevels(inst.weak);
        auto minimalSet = [&](const WeakConstraintSet& weak) {
            std::vector<Interpretation> best;
            for (const auto& m : models) {
                bool dominated = false;
                for (const auto& other : models)
                    if (precedes(other, m, weak)) { dominated = true; break; }
                if (!dominated) best.push_back(m);
            }
            return best;
        };
        require(minimalSet(inst.weak) == minimalSet(flat),
                "optimum model sets agree before and after level compilation");
    }
    require(multiLevel >= 100, "enough multi-level instances");
}

void criterion10() {
    std::mt19937 rng(1111);
    int checked = 0;
    for (int vars = 2; vars <= 4; vars++) {
        for (int round = 0; round < 60; round++) {
            int clauses = 1 + static_cast<int>(rng() % 7);
            int64_t top = 100;
            std::ostringstream os;
            os << "p wcnf " << vars << " " << clauses << " " << top << "\n";
            struct ClauseRec {
                int64_t weight;
                std::vector<int> lits;
            };
            std::vector<ClauseRec> hard, soft;
            for (int i = 0; i < clauses; i++) {
                bool isHard = rng() % 4 == 0;
                int64_t weight = isHard ? top : 1 + rng() % 9;
                std::vector<int> lits;
                int len = 1 + static_cast<int>(rng() % 3);
                for (int j = 0; j < len; j++) {
                    int v = 1 + static_cast<int>(rng() % vars);
                    lits.push_back(rng() % 2 ? v : -v);
                }
                os << weight;
                for (int l : lits) os << " " << l;
                os << " 0\n";
                (isHard ? hard : soft).push_back({weight, lits});
            }

            // brute force over every assignment
            std::optional<int64_t> bruteOptimum;
            for (uint64_t mask = 0; mask < (uint64_t{1} << vars); mask++) {
                auto sat = [&](const ClauseRec& c) {
                    for (int l : c.lits) {
                        bool value = (mask >> (std::abs(l) - 1)) & 1;
                        if ((l > 0 && value) || (l < 0 && !value)) return true;
                    }
                    return false;
                };
                bool feasible = true;
                for (const auto& c : hard)
                    if (!sat(c)) { feasible = false; break; }
                if (!feasible) continue;
                int64_t cost = 0;
                for (const auto& c : soft)
                    if (!sat(c)) cost += c.weight;
                if (!bruteOptimum || cost < *bruteOptimum) bruteOptimum = cost;
            }

            ParsedInstance inst = parseWcnf(os.str());
            StrategyConfig cfg; // conflict-driven oracle, core-guided search
            NullSink sink;
            OptResult r = optimize(inst, cfg, sink);
            if (!bruteOptimum) {
                require(r.status == OptStatus::Incoherent, "hard clauses unsatisfiable");
            } else {
                require(r.status == OptStatus::Optimum, "optimum reached");
                require(r.cost.get(1) == *bruteOptimum,
                        "translated optimum equals the brute-force minimum");
            }
            checked++;
        }
    }
    require(checked == 180, "the exhaustive sweep ran");
}

void criterion11() {
    // raw cores are non-minimal by construction: one genuine two-literal
    // conflict padded with satisfiable soft literals
    auto paddedInstance = [](int pad) {
        std::ostringstream os;
        os << "x1 :- not not x1.\nx2 :- not not x2.\n:- x1, x2.\n";
        os << ":~ not x1. [1@1]\n:~ not x2. [1@1]\n";
        for (int i = 0; i < pad; i++) {
            os << "f" << i << " :- not not f" << i << ".\n";
            os << ":~ not f" << i << ". [1@1]\n";
        }
        return os.str();
    };

    std::string path = "acceptance_padded.lp";
    {
        std::ofstream out(path);
        out << paddedInstance(5);
    }
    std::string manifestPath = "acceptance_manifest.txt";
    {
        std::ofstream out(manifestPath);
        out << path << " asp\n";
    }

    BenchOptions options;
    options.timeoutSeconds = 30;
    options.strategies = defaultStrategyMatrix();
    for (auto& s : options.strategies) {
        s.oracle = OracleKind::Enum; // raw cores
        s.shrinkBudget = SolveBudget::effort(1 << 16);
    }
    std::string csv = runBench(readManifest(manifestPath), options);
    std::remove(path.c_str());
    std::remove(manifestPath.c_str());

    require(csv.find("cores,core_lits_before,core_lits_after,shrink_calls,budget_hits,models") !=
                std::string::npos,
            "the statistic columns are present");
    std::vector<BenchRow> rows = parseBenchCsv(csv);
    int64_t litsWithoutShrink = -1, litsLinear = -1, litsProgression = -1;
    for (const auto& r : rows) {
        if (r.strategy == "one") litsWithoutShrink = r.stats.coreLitsAfter;
        if (r.strategy == "Lshr") litsLinear = r.stats.coreLitsAfter;
        if (r.strategy == "Pshr") litsProgression = r.stats.coreLitsAfter;
        require(r.status == "OPTIMUM", "every strategy solves the padded instance");
    }
    require(litsWithoutShrink > 0 && litsLinear > 0 && litsProgression > 0, "statistics populated");
    require(litsLinear <= litsWithoutShrink, "linear shrinking never analyzes more literals");
    require(litsProgression <= litsWithoutShrink, "progression shrinking never analyzes more literals");
    require(litsProgression < litsWithoutShrink, "shrinking bites on the padded conflict");
}

void criterion12() {
    StrategyConfig cfg;
    cfg.algorithm = Algorithm::One;
    cfg.shrink = ShrinkMode::None;
    cfg.oracle = OracleKind::Enum;
    cfg.seed = 0;
    cfg.shrinkBudget = SolveBudget::effort(1000);

    ParsedInstance two = parseGroundAsp(std::string(kProgram1) + kWeak1);
    std::ostringstream a1, a2;
    require(runProtocol(two, cfg, a1) == 0, "the two-level run reaches the optimum");
    runProtocol(two, cfg, a2);
    require(a1.str() == "o 0 2\nlb 0 2\ns OPTIMUM FOUND\nv a\n", "golden two-level transcript");
    require(a1.str() == a2.str(), "byte-identical reruns");

    ParsedInstance uniform = parseGroundAsp(std::string(kProgram1) + kWeak2);
    std::ostringstream b1, b2;
    require(runProtocol(uniform, cfg, b1) == 0, "the uniform run reaches the optimum");
    runProtocol(uniform, cfg, b2);
    require(b1.str() == "lb 1\ne inf\no 1\ne 0\ns OPTIMUM FOUND\nv a\n",
            "golden uniform transcript");
    require(b1.str() == b2.str(), "byte-identical reruns");
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<void()> body;
    };
    std::vector<Criterion> criteria = {
        {1, "stable models and reducts of the running example", criterion1},
        {2, "every strategy pins the two-level optimum", criterion2},
        {3, "the minimal core of the relaxed example", criterion3},
        {4, "core-guided trace of the uniform example", criterion4},
        {5, "progression shrinking probe schedule and budgets", criterion5},
        {6, "worst-case shrink call bounds", criterion6},
        {7, "estimate error formula and monotonicity", criterion7},
        {8, "cross-strategy cross-oracle optimum agreement", criterion8},
        {9, "level compilation preserves optimum model sets", criterion9},
        {10, "wcnf translation matches brute-force optima", criterion10},
        {11, "harness statistics and the shrinking smoke check", criterion11},
        {12, "protocol transcripts are byte-identical goldens", criterion12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        double start = now();
        try {
            c.body();
            printf("[PASS] %2d. %s (%.2fs)\n", c.number, c.title, now() - start);
        } catch (const CheckFailure& f) {
            failures++;
            printf("[FAIL] %2d. %s: %s\n", c.number, c.title, f.what.c_str());
        } catch (const std::exception& e) {
            failures++;
            printf("[FAIL] %2d. %s: unexpected error: %s\n", c.number, c.title, e.what());
        }
        fflush(stdout);
    }
    if (failures == 0) printf("all %zu acceptance criteria hold\n", criteria.size());
    else printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
