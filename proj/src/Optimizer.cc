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

#include "coreshrink/Optimizer.h"

#include "coreshrink/CdclOracle.h"
#include "coreshrink/EnumOracle.h"
#include "coreshrink/Relaxation.h"
#include "coreshrink/Semantics.h"

#include <chrono>

namespace coreshrink {

namespace {

struct StopSignal {};
struct IncoherentSignal {};

double wallSeconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

class Run {
public:
    Run(const ParsedInstance& instance, const StrategyConfig& cfg, EventSink& sink,
        const std::atomic<bool>* interrupt)
        : cfg_(cfg), sink_(sink), interrupt_(interrupt), work_(instance) {
        weak_ = cfg.compileLevels ? compileLevels(instance.weak) : instance.weak;
        work_.weak = weak_;
        levels_ = weak_.levelsDescending();
        startTime_ = wallSeconds();
        if (cfg.timeoutSeconds) deadline_ = startTime_ + *cfg.timeoutSeconds;
        if (cfg.oracle == OracleKind::Cdcl)
            oracle_ = std::make_unique<CdclOracle>(work_.program, cfg.seed);
        else
            oracle_ = std::make_unique<EnumOracle>(work_.program, CoreMode::Raw, cfg.enumAtomCap);
    }

    OptResult execute() {
        cfg_.validate();
        OptResult result;
        result.status = OptStatus::Optimum;
        try {
            if (weak_.empty()) runTrivial();
            else if (cfg_.algorithm == Algorithm::LinSU) runLinsu();
            else runOne();
        } catch (const StopSignal&) {
            result.status = best_ ? OptStatus::Satisfiable : OptStatus::Unknown;
        } catch (const IncoherentSignal&) {
            result.status = OptStatus::Incoherent;
        }
        if (best_) {
            result.model = *best_;
            result.cost = costVector(weak_, *best_);
        }
        result.lbVector = lbVectorNow();
        if (result.status == OptStatus::Optimum && best_) result.lbVector = result.cost;

        AnytimeEvent final = baseEvent(EventKind::Final);
        if (result.status == OptStatus::Optimum && best_) final.lbVector = result.cost;
        emit(final);
        return result;
    }

private:
    StrategyConfig cfg_;
    EventSink& sink_;
    const std::atomic<bool>* interrupt_;
    ParsedInstance work_;
    WeakConstraintSet weak_;
    std::vector<int> levels_;
    SoftRegistry registry_;
    std::unique_ptr<Oracle> oracle_;

    std::optional<Interpretation> best_;
    std::map<int, int64_t> lbByLevel_;
    int curLevel_ = 0;
    int64_t lb_ = 0;
    std::optional<int64_t> ub_;

    double startTime_ = 0;
    std::optional<double> deadline_;

    // -------------------------------------------------------------- plumbing

    void checkStop() const {
        if (interrupt_ && interrupt_->load(std::memory_order_relaxed)) throw StopSignal{};
        if (deadline_ && wallSeconds() > *deadline_) throw StopSignal{};
    }

    OracleVerdict solveCall(const AssumptionSet& assumptions) {
        checkStop();
        if (!deadline_) return oracle_->solve(assumptions);
        double remaining = *deadline_ - wallSeconds();
        if (remaining <= 0) throw StopSignal{};
        OracleVerdict v = oracle_->solveWithBudget(assumptions, SolveBudget::seconds(remaining));
        if (v.status == SolveStatus::Unknown) throw StopSignal{};
        return v;
    }

    void addRuleEverywhere(const Rule& r) {
        work_.program.add(r);
        oracle_->addRule(r);
    }

    void forwardToOracle(const std::vector<Rule>& rules) {
        for (const auto& r : rules) oracle_->addRule(r);
    }

    CostVector lbVectorNow() const {
        CostVector cv;
        for (int l : levels_) {
            auto it = lbByLevel_.find(l);
            cv.set(l, it == lbByLevel_.end() ? 0 : it->second);
        }
        return cv;
    }

    AnytimeEvent baseEvent(EventKind kind) {
        AnytimeEvent e;
        e.at = wallSeconds() - startTime_;
        e.kind = kind;
        e.level = curLevel_;
        e.lbVector = lbVectorNow();
        if (best_) {
            e.hasModel = true;
            e.bestCost = costVector(weak_, *best_);
        }
        e.levelUbFinite = ub_.has_value();
        e.levelUb = ub_.value_or(0);
        e.levelLb = lb_;
        return e;
    }

    void emit(const AnytimeEvent& e) { sink_.onEvent(e); }

    // ------------------------------------------------------------- incumbent

    /// Records a model verdict; improves the incumbent when it beats the
    /// level upper bound. The model event carries the cost of the model at
    /// hand, the improvement event that of the incumbent.
    bool noteModel(const Interpretation& model) {
        AnytimeEvent found = baseEvent(EventKind::Model);
        found.hasModel = true;
        found.bestCost = costVector(weak_, model);
        emit(found);
        int64_t c = cost(weak_, curLevel_, model);
        if (ub_ && c >= *ub_) return false;
        best_ = model.restrictedTo(work_.visible);
        ub_ = c;
        assert(lb_ <= *ub_);
        emit(baseEvent(EventKind::UbImproved));
        return true;
    }

    /// Soft atoms whose falsity would push the level cost past the upper
    /// bound are forced true and leave the weight function.
    void hardening() {
        if (!ub_) return;
        for (int p : registry_.softOrder()) {
            int64_t w = registry_.weight(p);
            if (w >= 1 && lb_ + w > *ub_) {
                addRuleEverywhere(Rule::constraint({Literal{p, 1}}));
                registry_.setWeight(p, 0);
            }
        }
    }

    // ------------------------------------------------------------------- ONE

    AssumptionSet assumptionsWithWeightAtLeast(int64_t stratum, bool originalOnly) const {
        AssumptionSet s;
        for (int p : registry_.softOrder()) {
            if (originalOnly && !registry_.isOriginal(p)) continue;
            if (registry_.weight(p) >= stratum) s.atoms.push_back(p);
        }
        return s;
    }

    /// Greatest weight strictly below `below` (-1 meaning infinity); 0 when
    /// no positive weight remains.
    int64_t maxWeightBelow(int64_t below) const {
        int64_t out = 0;
        for (int p : registry_.softOrder()) {
            int64_t w = registry_.weight(p);
            if (w >= 1 && (below < 0 || w < below) && w > out) out = w;
        }
        return out;
    }

    bool anyWeightBelow(int64_t below) const {
        for (int p : registry_.softOrder()) {
            int64_t w = registry_.weight(p);
            if (w >= 1 && w < below) return true;
        }
        return false;
    }

    void runOne() {
        for (int level : levels_) {
            curLevel_ = level;
            lb_ = 0;
            ub_.reset();
            lbByLevel_[level] = 0;

            RelaxationOutput relaxed = relaxLevel(weak_, level, work_.program, registry_);
            forwardToOracle(relaxed.addedRules);

            if (best_) {
                ub_ = cost(weak_, level, *best_);
                hardening();
            }

            int64_t stratum = -1; // infinity
            for (;;) {
                if (cfg_.stratification) stratum = maxWeightBelow(stratum);
                else stratum = stratum < 0 ? 1 : 0;
                bool stratumDefined = stratum >= 1;
                if (stratumDefined) {
                    AnytimeEvent e = baseEvent(EventKind::Stratum);
                    e.stratumWeight = stratum;
                    emit(e);
                    if (cfg_.disjointCores) disjointCoresPhase(stratum);
                }
                for (;;) {
                    AssumptionSet assumptions =
                        stratumDefined ? assumptionsWithWeightAtLeast(stratum, false) : AssumptionSet{};
                    OracleVerdict v = solveCall(assumptions);
                    if (v.status == SolveStatus::Incoherent) {
                        if (!stratumDefined || v.core->empty()) throw IncoherentSignal{};
                        analyzeCore(*v.core, stratum);
                        continue;
                    }
                    if (noteModel(*v.model)) hardening();
                    break;
                }
                if (!(cfg_.stratification && stratumDefined && anyWeightBelow(stratum))) break;
            }

            // level closure: any soft literal still weighted is pinned true
            for (int p : registry_.softOrder()) {
                if (registry_.weight(p) >= 1) {
                    addRuleEverywhere(Rule::constraint({Literal{p, 1}}));
                    registry_.setWeight(p, 0);
                }
            }
            assert(ub_.has_value() && lb_ <= *ub_);
            emit(baseEvent(EventKind::LevelDone));
        }
    }

    /// Core analysis of ONE: optional shrinking, then the relaxation that
    /// moves one stratum of weight onto fresh soft literals and lifts the
    /// lower bound.
    void analyzeCore(AssumptionSet core, int64_t stratum) {
        {
            AnytimeEvent e = baseEvent(EventKind::CoreFound);
            e.coreSize = static_cast<int64_t>(core.size());
            emit(e);
        }
        if (cfg_.shrink != ShrinkMode::None) core = shrinkCore(std::move(core));
        if (core.empty()) throw IncoherentSignal{};

        int64_t increment = stratum;
        if (!cfg_.stratification) {
            increment = registry_.weight(core.atoms[0]);
            for (int p : core.atoms) increment = std::min(increment, registry_.weight(p));
        }
        RelaxationOutput out = relaxCore(core, increment, work_.program, registry_);
        forwardToOracle(out.addedRules);
        lb_ += out.lbIncrement;
        lbByLevel_[curLevel_] = lb_;
        assert(!ub_ || lb_ <= *ub_);
        emit(baseEvent(EventKind::LbImproved));
        hardening();
    }

    AssumptionSet shrinkCore(AssumptionSet core) {
        const int64_t originalSize = static_cast<int64_t>(core.size());
        int64_t calls = 0;
        auto onVerdict = [&](const OracleVerdict& v) {
            checkStop();
            if (v.status == SolveStatus::Unknown) emit(baseEvent(EventKind::BudgetHit));
            else if (v.status == SolveStatus::Coherent) noteModel(*v.model);
        };
        core = shrinkCoreSearch(*oracle_, std::move(core), cfg_.shrink, cfg_.shrinkBudget, onVerdict, &calls);
        AnytimeEvent e = baseEvent(EventKind::CoreShrunk);
        e.coreSize = originalSize;
        e.coreSizeAfter = static_cast<int64_t>(core.size());
        e.shrinkCalls = calls;
        emit(e);
        return core;
    }

    /// Preliminary pass per stratum: only the soft literals of input weak
    /// constraints are assumed, cores found here are pairwise disjoint, and
    /// the first model ends the phase.
    void disjointCoresPhase(int64_t stratum) {
        for (;;) {
            AssumptionSet assumptions = assumptionsWithWeightAtLeast(stratum, true);
            OracleVerdict v = solveCall(assumptions);
            if (v.status == SolveStatus::Incoherent) {
                if (v.core->empty()) throw IncoherentSignal{};
                analyzeCore(*v.core, stratum);
                continue;
            }
            if (noteModel(*v.model)) hardening();
            return;
        }
    }

    // ----------------------------------------------------------------- linSU

    void runLinsu() {
        for (int level : levels_) {
            curLevel_ = level;
            lb_ = 0;
            ub_.reset();
            lbByLevel_[level] = 0;

            RelaxationOutput relaxed = relaxLevel(weak_, level, work_.program, registry_);
            forwardToOracle(relaxed.addedRules);

            std::vector<AggregateElement> penalty;
            int64_t weightSum = 0;
            for (int s : relaxed.softAtoms) {
                penalty.push_back({registry_.weight(s), Literal{s, 1}});
                weightSum += registry_.weight(s);
            }

            int activator = work_.program.atoms.add("@bound_" + std::to_string(level));
            addRuleEverywhere(Rule::choice(activator));

            ub_ = best_ ? cost(weak_, level, *best_) : 1 + weightSum;
            for (;;) {
                Aggregate sum{penalty, Rel::Ge, *ub_};
                addRuleEverywhere(Rule::constraint({Literal{activator, 0}, std::move(sum)}));
                OracleVerdict v = solveCall(AssumptionSet{{activator}});
                if (v.status == SolveStatus::Incoherent) {
                    if (!best_) throw IncoherentSignal{};
                    break;
                }
                bool improved = noteModel(*v.model);
                assert(improved);
                (void)improved;
            }

            // pin the level and retire its bound activator
            addRuleEverywhere(Rule::constraint({Aggregate{penalty, Rel::Ne, *ub_}}));
            addRuleEverywhere(Rule::constraint({Literal{activator, 0}}));
            lb_ = *ub_;
            lbByLevel_[level] = lb_;
            if (lb_ > 0) emit(baseEvent(EventKind::LbImproved));
            emit(baseEvent(EventKind::LevelDone));
        }
    }

    // --------------------------------------------------------------- trivial

    void runTrivial() {
        OracleVerdict v = solveCall(AssumptionSet{});
        if (v.status == SolveStatus::Incoherent) throw IncoherentSignal{};
        noteModel(*v.model);
    }
};

} // namespace

OptResult optimize(const ParsedInstance& instance, const StrategyConfig& cfg, EventSink& sink,
                   const std::atomic<bool>* interrupt) {
    return Run(instance, cfg, sink, interrupt).execute();
}

AssumptionSet shrinkCoreSearch(Oracle& oracle, AssumptionSet core, ShrinkMode mode,
                               const SolveBudget& budget,
                               const std::function<void(const OracleVerdict&)>& onVerdict,
                               int64_t* probeCount) {
    assert(mode != ShrinkMode::None && !core.empty());
    int64_t calls = 0;
    // m and pr in half-units: m = -1, pr = 1
    int64_t m2 = -2;
    int64_t pr2 = 2;
    for (;;) {
        int64_t prefixEnd = (m2 + pr2) / 2; // floor(m + pr)
        assert(m2 + pr2 >= 0 && prefixEnd < static_cast<int64_t>(core.size()));
        AssumptionSet probe;
        probe.atoms.assign(core.atoms.begin(), core.atoms.begin() + prefixEnd + 1);

        OracleVerdict v = oracle.solveWithBudget(probe, budget);
        calls++;
        onVerdict(v);
        if (v.status == SolveStatus::Incoherent) {
            core = *v.core; // smaller core found
            if (core.empty()) break;
        }

        int64_t end2 = 2 * (static_cast<int64_t>(core.size()) - 1); // |C| - 1 in half-units
        if (m2 + 2 * pr2 >= end2) { // reiterate progression
            m2 += pr2;
            pr2 = 1;
        }
        if (m2 + 2 * pr2 < end2) { // increase progression
            pr2 = mode == ShrinkMode::Progression ? 2 * pr2 : pr2 + 2;
            continue;
        }
        break;
    }
    if (probeCount) *probeCount = calls;
    return core;
}

const char* optStatusName(OptStatus s) {
    switch (s) {
        case OptStatus::Optimum: return "OPTIMUM";
        case OptStatus::Satisfiable: return "SATISFIABLE";
        case OptStatus::Incoherent: return "UNSATISFIABLE";
        case OptStatus::Unknown: return "UNKNOWN";
    }
    return "?";
}

} // namespace coreshrink
