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

#ifndef SABLE_SEARCH_HPP
#define SABLE_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sable/outcome.hpp"
#include "sable/pipeline.hpp"
#include "sable/propagation.hpp"
#include "sable/unfounded.hpp"

namespace sable {

struct SearchConfig {
    std::uint32_t luby_base = 64;
    bool restarts_enabled = true;
    bool phase_saving = true;
    double var_inc = 1.0;
    double var_decay = 0.95;
    double clause_decay = 0.999;
    double max_learned_factor = 1.0 / 3.0;
    double max_learned_growth = 1.1;
    bool default_polarity_positive = false;
    std::uint64_t seed = 1; // reserved for randomized heuristics; recorded only
    std::uint64_t max_models = 1; // 0 = all
    double budget_seconds = 0.0;  // 0 = unlimited
    std::uint64_t budget_conflicts = 0;
};

/// The restart sequence 1,1,2,1,1,2,4,1,1,2,1,1,2,4,8,... (1-indexed).
std::uint64_t luby(std::uint64_t i);

/// Optional instrumentation; every hook defaults to a no-op.
struct SearchObserver {
    virtual ~SearchObserver() = default;
    virtual void on_learned(const std::vector<Literal>& clause, std::uint32_t backjump_level,
                            const Trail& trail) {}
    virtual void on_loop_clause(const std::vector<Literal>& clause) {}
    virtual void on_restart(std::uint64_t conflicts_since_last) {}
    virtual void on_model(const Model& model) {}
};

/// Indexed binary max-heap over atoms: highest activity first, lowest
/// id on ties.
class ActivityHeap {
  public:
    explicit ActivityHeap(const std::vector<double>& activity) : activity_(activity) {}

    bool empty() const { return heap_.empty(); }

    bool contains(AtomId atom) const {
        return atom < pos_.size() && pos_[atom] != kAbsent;
    }

    void insert(AtomId atom) {
        if (contains(atom)) return;
        if (pos_.size() <= atom) pos_.resize(atom + 1, kAbsent);
        pos_[atom] = static_cast<std::uint32_t>(heap_.size());
        heap_.push_back(atom);
        sift_up(pos_[atom]);
    }

    AtomId pop_max() {
        const AtomId top = heap_.front();
        pos_[top] = kAbsent;
        if (heap_.size() > 1) {
            heap_.front() = heap_.back();
            pos_[heap_.front()] = 0;
            heap_.pop_back();
            sift_down(0);
        } else {
            heap_.pop_back();
        }
        return top;
    }

    void increased(AtomId atom) {
        if (contains(atom)) sift_up(pos_[atom]);
    }

  private:
    static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;

    bool before(AtomId a, AtomId b) const {
        return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
    }

    void sift_up(std::uint32_t i) {
        while (i > 0) {
            const std::uint32_t parent = (i - 1) / 2;
            if (!before(heap_[i], heap_[parent])) break;
            std::swap(heap_[i], heap_[parent]);
            std::swap(pos_[heap_[i]], pos_[heap_[parent]]);
            i = parent;
        }
    }

    void sift_down(std::uint32_t i) {
        const std::uint32_t n = static_cast<std::uint32_t>(heap_.size());
        while (true) {
            std::uint32_t best = i;
            for (const std::uint32_t child : {2 * i + 1, 2 * i + 2}) {
                if (child < n && before(heap_[child], heap_[best])) best = child;
            }
            if (best == i) break;
            std::swap(heap_[i], heap_[best]);
            std::swap(pos_[heap_[i]], pos_[heap_[best]]);
            i = best;
        }
    }

    const std::vector<double>& activity_;
    std::vector<AtomId> heap_;
    std::vector<std::uint32_t> pos_;
};

/// CDCL with interleaved well-founded propagation: decide, propagate to
/// fixpoint, learn at the first UIP, backjump, restart on the Luby
/// schedule, trim the learned-clause database.
class Solver {
  public:
    Solver(const CompiledProblem& cp, SearchConfig cfg, SearchObserver* observer = nullptr);

    SolveOutcome solve();

    /// Exposed for tests: first-UIP resolution plus recursive literal
    /// minimization. Returns the learned clause (asserting literal at
    /// index 0, highest-level survivor at index 1) and backjump level.
    std::pair<std::vector<Literal>, std::uint32_t> analyze_conflict(ClauseRef conflict);

    const Trail& trail() const { return engine_.trail(); }

    /// Exposed for tests: the underlying propagation engine.
    PropagationEngine& engine() { return engine_; }

  private:
    std::optional<ClauseRef> propagate_fixpoint();
    std::optional<ClauseRef> add_loop_clause(std::vector<Literal> lits);
    bool literal_redundant(Literal l, std::uint32_t abstract_levels);
    void bump_var(AtomId atom);
    void bump_clause(ClauseRef ref);
    void decay_activities();
    void backjump_to(std::uint32_t level);
    void handle_learned(std::vector<Literal> learned, std::uint32_t backjump_level);
    void reduce_learned();
    void maybe_collect_garbage();
    Literal pick_branch_literal();
    Model extract_model() const;
    bool total() const;
    SolveOutcome finish(Verdict verdict);

    const CompiledProblem& cp_;
    SearchConfig cfg_;
    SearchObserver* observer_;

    PropagationEngine engine_;
    std::optional<UnfoundedDetector> detector_;

    std::vector<double> activity_;
    ActivityHeap heap_;
    std::vector<bool> saved_phase_; // true = positive
    double var_inc_;
    double cla_inc_ = 1.0;

    std::vector<ClauseRef> learned_;
    std::map<std::vector<std::uint32_t>, ClauseRef> loop_index_; // sorted codes → clause
    double max_learned_;

    std::uint64_t restart_index_ = 1;
    std::uint64_t conflicts_since_restart_ = 0;

    std::uint32_t assignable_atoms_ = 0;

    // analyze_conflict scratch
    std::vector<std::uint8_t> seen_;
    std::vector<AtomId> to_clear_;

    Statistics stats_;
    std::vector<Model> models_;
};

} // namespace sable

#endif
