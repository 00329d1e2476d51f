/*
 *  Copyright 2026 The sable authors
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
 */

#include "sable/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace sable {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

std::uint64_t luby(std::uint64_t i) {
    while (true) {
        std::uint64_t k = 1;
        while (((std::uint64_t{1} << k) - 1) < i) ++k;
        if (((std::uint64_t{1} << k) - 1) == i) return std::uint64_t{1} << (k - 1);
        i -= (std::uint64_t{1} << (k - 1)) - 1;
    }
}

Solver::Solver(const CompiledProblem& cp, SearchConfig cfg, SearchObserver* observer)
    : cp_(cp),
      cfg_(cfg),
      observer_(observer),
      engine_(cp.total_atoms),
      activity_(cp.total_atoms, 0.0),
      heap_(activity_),
      saved_phase_(cp.total_atoms, cfg.default_polarity_positive),
      var_inc_(cfg.var_inc) {
    if (!cp.graph.tight) detector_.emplace(cp.program, cp.graph, cp.aux);

    engine_.enqueue(Literal::negative(kFalsityAtom), ReasonKind::Initial, kNoClause);
    for (const Clause& c : cp.clauses.clauses()) engine_.add_initial_clause(c);

    for (AtomId a = 0; a < cp.total_atoms; ++a) {
        if (a < cp.eliminated.size() && cp.eliminated[a]) continue;
        ++assignable_atoms_;
        heap_.insert(a);
    }

    max_learned_ = std::max(64.0, cfg.max_learned_factor *
                                      static_cast<double>(cp.clauses.size()));
    seen_.assign(cp.total_atoms, 0);
}

bool Solver::total() const { return engine_.trail().size() == assignable_atoms_; }

std::optional<ClauseRef> Solver::propagate_fixpoint() {
    while (true) {
        if (auto conflict = engine_.unit_propagate()) return conflict;
        if (!detector_) return std::nullopt;
        auto lits = detector_->well_founded_step(engine_.trail());
        if (!lits) return std::nullopt;
        if (auto conflict = add_loop_clause(std::move(*lits))) return conflict;
    }
}

std::optional<ClauseRef> Solver::add_loop_clause(std::vector<Literal> lits) {
    if (observer_) observer_->on_loop_clause(lits);

    std::vector<std::uint32_t> key;
    key.reserve(lits.size());
    for (const Literal l : lits) key.push_back(l.code());
    std::sort(key.begin(), key.end());

    const auto it = loop_index_.find(key);
    if (it != loop_index_.end()) return engine_.assert_clause(it->second);

    // Best watches first: non-false literals, then the latest-falsified.
    const Trail& t = engine_.trail();
    const auto rank = [&](Literal l) -> std::uint64_t {
        if (!t.is_false(l)) return ~std::uint64_t{0};
        return t.position(l.atom());
    };
    for (std::uint32_t slot = 0; slot < 2 && slot < lits.size(); ++slot) {
        std::uint32_t best = slot;
        for (std::uint32_t i = slot + 1; i < lits.size(); ++i) {
            if (rank(lits[i]) > rank(lits[best])) best = i;
        }
        std::swap(lits[slot], lits[best]);
    }

    const ClauseRef ref = engine_.add_clause(lits, ClauseOrigin::LearnedLoop);
    loop_index_.emplace(std::move(key), ref);
    ++stats_.loop_clauses;
    return engine_.assert_clause(ref);
}

void Solver::bump_var(AtomId atom) {
    activity_[atom] += var_inc_;
    if (activity_[atom] > 1e100) {
        for (double& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    heap_.increased(atom);
}

void Solver::bump_clause(ClauseRef ref) {
    if (engine_.db().origin(ref) != ClauseOrigin::LearnedConflict) return;
    const double bumped = engine_.db().activity(ref) + cla_inc_;
    engine_.db().set_activity(ref, static_cast<float>(bumped));
    if (bumped > 1e20) {
        for (const ClauseRef c : learned_) {
            engine_.db().set_activity(c, engine_.db().activity(c) * 1e-20f);
        }
        cla_inc_ *= 1e-20;
    }
}

void Solver::decay_activities() {
    var_inc_ /= cfg_.var_decay;
    cla_inc_ /= cfg_.clause_decay;
}

bool Solver::literal_redundant(Literal l, std::uint32_t abstract_levels) {
    const Trail& t = engine_.trail();
    std::vector<AtomId> stack{l.atom()};
    const std::size_t undo_from = to_clear_.size();
    while (!stack.empty()) {
        const AtomId v = stack.back();
        stack.pop_back();
        const ClauseRef reason = t.reason(v);
        for (const Literal q : engine_.db().literals(reason)) {
            const AtomId w = q.atom();
            if (w == v || seen_[w] || t.level(w) == 0) continue;
            if (t.reason_kind(w) == ReasonKind::Clause &&
                ((std::uint32_t{1} << (t.level(w) & 31)) & abstract_levels) != 0) {
                seen_[w] = 1;
                to_clear_.push_back(w);
                stack.push_back(w);
            } else {
                for (std::size_t i = undo_from; i < to_clear_.size(); ++i) seen_[to_clear_[i]] = 0;
                to_clear_.resize(undo_from);
                return false;
            }
        }
    }
    return true;
}

std::pair<std::vector<Literal>, std::uint32_t> Solver::analyze_conflict(ClauseRef conflict) {
    const Trail& t = engine_.trail();
    const std::uint32_t conflict_level = t.current_level();
    assert(conflict_level > 0);

    std::vector<Literal> learned{Literal::positive(0)}; // placeholder for the UIP
    std::uint32_t counter = 0;
    std::uint32_t index = t.size();
    ClauseRef reason = conflict;
    Literal pivot = Literal::positive(0);
    bool have_pivot = false;

    while (true) {
        bump_clause(reason);
        for (const Literal q : engine_.db().literals(reason)) {
            if (have_pivot && q == pivot) continue;
            const AtomId v = q.atom();
            if (seen_[v] || t.level(v) == 0) continue;
            seen_[v] = 1;
            to_clear_.push_back(v);
            bump_var(v);
            if (t.level(v) >= conflict_level) {
                ++counter;
            } else {
                learned.push_back(q);
            }
        }
        do {
            --index;
        } while (!seen_[t.at(index).atom()]);
        pivot = t.at(index);
        have_pivot = true;
        if (--counter == 0) break;
        assert(t.reason_kind(pivot.atom()) == ReasonKind::Clause);
        reason = t.reason(pivot.atom());
    }
    learned[0] = ~pivot;

    // Recursive minimization: drop literals implied by the rest.
    std::uint32_t abstract_levels = 0;
    for (std::size_t i = 1; i < learned.size(); ++i) {
        abstract_levels |= std::uint32_t{1} << (t.level(learned[i].atom()) & 31);
    }
    std::size_t kept = 1;
    for (std::size_t i = 1; i < learned.size(); ++i) {
        const AtomId v = learned[i].atom();
        if (t.reason_kind(v) != ReasonKind::Clause || !literal_redundant(learned[i], abstract_levels)) {
            learned[kept++] = learned[i];
        }
    }
    learned.resize(kept);

    std::uint32_t backjump_level = 0;
    if (learned.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learned.size(); ++i) {
            if (t.level(learned[i].atom()) > t.level(learned[max_i].atom())) max_i = i;
        }
        std::swap(learned[1], learned[max_i]);
        backjump_level = t.level(learned[1].atom());
    }

    for (const AtomId v : to_clear_) seen_[v] = 0;
    to_clear_.clear();
    return {std::move(learned), backjump_level};
}

void Solver::backjump_to(std::uint32_t level) {
    if (level >= engine_.trail().current_level()) return;
    engine_.backjump(level, [&](Literal l) {
        const AtomId v = l.atom();
        if (cfg_.phase_saving) saved_phase_[v] = l.is_positive();
        heap_.insert(v);
    });
    if (detector_) detector_->on_backjump(engine_.trail());
}

void Solver::handle_learned(std::vector<Literal> learned, std::uint32_t backjump_level) {
    ++stats_.learned_clauses;
    if (observer_) observer_->on_learned(learned, backjump_level, engine_.trail());
    backjump_to(backjump_level);
    if (learned.size() == 1) {
        engine_.enqueue(learned[0], ReasonKind::Initial, kNoClause);
        return;
    }
    const ClauseRef ref = engine_.add_clause(learned, ClauseOrigin::LearnedConflict);
    learned_.push_back(ref);
    bump_clause(ref);
    engine_.enqueue(learned[0], ReasonKind::Clause, ref);
}

void Solver::reduce_learned() {
    std::vector<ClauseRef> deletable;
    deletable.reserve(learned_.size());
    for (const ClauseRef ref : learned_) {
        if (engine_.db().clause_size(ref) >= 3 && !engine_.is_reason(ref)) {
            deletable.push_back(ref);
        }
    }
    std::sort(deletable.begin(), deletable.end(), [&](ClauseRef a, ClauseRef b) {
        const float aa = engine_.db().activity(a);
        const float ab = engine_.db().activity(b);
        return aa < ab || (aa == ab && a < b);
    });
    const std::size_t victims = deletable.size() / 2;
    for (std::size_t i = 0; i < victims; ++i) {
        engine_.remove_clause(deletable[i]);
        ++stats_.deleted_clauses;
    }
    std::erase_if(learned_, [&](ClauseRef ref) { return engine_.db().deleted(ref); });
    max_learned_ *= cfg_.max_learned_growth;
    maybe_collect_garbage();
}

void Solver::maybe_collect_garbage() {
    if (!engine_.needs_gc()) return;
    engine_.garbage_collect([&](const ClauseDb::Remap& remap) {
        for (ClauseRef& ref : learned_) ref = remap(ref);
        for (auto& entry : loop_index_) entry.second = remap(entry.second);
    });
}

Literal Solver::pick_branch_literal() {
    while (true) {
        assert(!heap_.empty());
        const AtomId v = heap_.pop_max();
        if (engine_.trail().value(v) != Truth::Undef) continue;
        return saved_phase_[v] ? Literal::positive(v) : Literal::negative(v);
    }
}

Model Solver::extract_model() const {
    std::vector<Truth> values(cp_.total_atoms, Truth::Undef);
    for (AtomId a = 0; a < cp_.total_atoms; ++a) values[a] = engine_.trail().value(a);
    values = reconstruct(std::move(values), cp_.log);
    Model m;
    for (AtomId a = 1; a < cp_.original_atom_count; ++a) {
        if (values[a] == Truth::True) m.push_back(a);
    }
    return m;
}

SolveOutcome Solver::finish(Verdict verdict) {
    if (verdict == Verdict::BudgetExhausted && !models_.empty()) verdict = Verdict::ModelsFound;
    stats_.propagations = engine_.propagation_count();
    if (detector_) stats_.unfounded_sets = detector_->sets_found();
    return SolveOutcome{verdict, std::move(models_), stats_};
}

SolveOutcome Solver::solve() {
    const Clock::time_point start = Clock::now();
    const auto done = [&](Verdict v) {
        SolveOutcome out = finish(v);
        out.stats.solve_time = seconds_since(start);
        return out;
    };

    if (cp_.clauses.has_empty_clause() || engine_.level0_conflict()) {
        return done(Verdict::Inconsistent);
    }

    while (true) {
        const std::optional<ClauseRef> conflict = propagate_fixpoint();
        if (conflict) {
            ++stats_.conflicts;
            ++conflicts_since_restart_;
            if (cfg_.budget_conflicts != 0 && stats_.conflicts >= cfg_.budget_conflicts) {
                return done(Verdict::BudgetExhausted);
            }
            if (cfg_.budget_seconds > 0.0 && stats_.conflicts % 1024 == 0 &&
                seconds_since(start) > cfg_.budget_seconds) {
                return done(Verdict::BudgetExhausted);
            }

            // A clause reported by assert_clause may sit entirely below
            // the current decision level; analysis runs at its level.
            std::uint32_t conflict_level = 0;
            if (*conflict != kNoClause) {
                for (const Literal l : engine_.db().literals(*conflict)) {
                    conflict_level = std::max(conflict_level, engine_.trail().level(l.atom()));
                }
            }
            if (conflict_level == 0) {
                return done(models_.empty() ? Verdict::Inconsistent : Verdict::ModelsFound);
            }
            backjump_to(conflict_level);

            auto [learned, backjump_level] = analyze_conflict(*conflict);
            handle_learned(std::move(learned), backjump_level);
            decay_activities();

            if (learned_.size() >= static_cast<std::size_t>(max_learned_)) reduce_learned();

            if (cfg_.restarts_enabled &&
                conflicts_since_restart_ >= luby(restart_index_) * cfg_.luby_base) {
                ++stats_.restarts;
                if (observer_) observer_->on_restart(conflicts_since_restart_);
                conflicts_since_restart_ = 0;
                ++restart_index_;
                backjump_to(0);
            }
            continue;
        }

        if (total()) {
            const Model model = extract_model();
            models_.push_back(model);
            if (observer_) observer_->on_model(model);
            if (cfg_.max_models != 0 && models_.size() >= cfg_.max_models) {
                return done(Verdict::ModelsFound);
            }
            if (cfg_.budget_seconds > 0.0 && seconds_since(start) > cfg_.budget_seconds) {
                return done(Verdict::BudgetExhausted);
            }

            // Block this projection and keep searching.
            std::vector<Literal> block;
            for (AtomId a = 1; a < cp_.original_atom_count; ++a) {
                block.push_back(engine_.trail().is_true(Literal::positive(a))
                                    ? Literal::negative(a)
                                    : Literal::positive(a));
            }
            backjump_to(0);
            if (block.empty()) return done(Verdict::ModelsFound);
            // Literals false at level zero must not end up watched; they
            // would never be revisited and the clause would go inert.
            std::stable_partition(block.begin(), block.end(), [this](Literal l) {
                return !engine_.trail().is_false(l);
            });
            const ClauseRef ref = engine_.add_clause(block, ClauseOrigin::LearnedConflict);
            if (engine_.assert_clause(ref)) return done(Verdict::ModelsFound);
            continue;
        }

        const Literal decision = pick_branch_literal();
        ++stats_.decisions;
        engine_.trail().new_level();
        engine_.enqueue(decision, ReasonKind::Decision, kNoClause);
    }
}

} // namespace sable
