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

#ifndef SABLE_PROPAGATION_HPP
#define SABLE_PROPAGATION_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sable/clause.hpp"
#include "sable/literal.hpp"

namespace sable {

using ClauseRef = std::uint32_t;
inline constexpr ClauseRef kNoClause = 0xFFFFFFFFu;

/// Flat arena of clauses addressed by word offset. Layout per clause:
/// a header word (size, origin, deleted flag), an activity word, then
/// the literal codes. Removal only marks; compact() reclaims.
class ClauseDb {
  public:
    ClauseRef add(const std::vector<Literal>& lits, ClauseOrigin origin) {
        const ClauseRef ref = static_cast<ClauseRef>(words_.size());
        words_.push_back((static_cast<std::uint32_t>(lits.size()) << 3) |
                         (static_cast<std::uint32_t>(origin) << 1));
        words_.push_back(std::bit_cast<std::uint32_t>(0.0f));
        for (const Literal l : lits) words_.push_back(l.code());
        ++live_count_;
        return ref;
    }

    std::uint32_t clause_size(ClauseRef ref) const { return words_[ref] >> 3; }

    ClauseOrigin origin(ClauseRef ref) const {
        return static_cast<ClauseOrigin>((words_[ref] >> 1) & 3u);
    }

    bool deleted(ClauseRef ref) const { return (words_[ref] & 1u) != 0; }

    Literal lit(ClauseRef ref, std::uint32_t i) const {
        return Literal::from_code(words_[ref + 2 + i]);
    }

    void set_lit(ClauseRef ref, std::uint32_t i, Literal l) { words_[ref + 2 + i] = l.code(); }

    void swap_lits(ClauseRef ref, std::uint32_t i, std::uint32_t j) {
        std::swap(words_[ref + 2 + i], words_[ref + 2 + j]);
    }

    std::vector<Literal> literals(ClauseRef ref) const {
        std::vector<Literal> out;
        const std::uint32_t n = clause_size(ref);
        out.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) out.push_back(lit(ref, i));
        return out;
    }

    float activity(ClauseRef ref) const { return std::bit_cast<float>(words_[ref + 1]); }

    void set_activity(ClauseRef ref, float a) { words_[ref + 1] = std::bit_cast<std::uint32_t>(a); }

    void remove(ClauseRef ref) {
        assert(!deleted(ref));
        words_[ref] |= 1u;
        freed_ += 2 + clause_size(ref);
        --live_count_;
    }

    std::uint64_t live_count() const { return live_count_; }

    bool wasteful() const { return freed_ * 4 > words_.size(); }

    /// Old-to-new reference translation produced by compact().
    class Remap {
      public:
        explicit Remap(std::vector<std::pair<ClauseRef, ClauseRef>> pairs)
            : pairs_(std::move(pairs)) {}

        ClauseRef operator()(ClauseRef old) const {
            if (old == kNoClause) return kNoClause;
            const auto it = std::lower_bound(
                pairs_.begin(), pairs_.end(), old,
                [](const auto& pair, ClauseRef key) { return pair.first < key; });
            assert(it != pairs_.end() && it->first == old);
            return it->second;
        }

      private:
        std::vector<std::pair<ClauseRef, ClauseRef>> pairs_;
    };

    /// Drops deleted clauses and shifts the survivors down. Every stored
    /// ClauseRef must be translated through the returned remap.
    Remap compact() {
        std::vector<std::uint32_t> packed;
        packed.reserve(words_.size() - freed_);
        std::vector<std::pair<ClauseRef, ClauseRef>> pairs;
        std::size_t off = 0;
        while (off < words_.size()) {
            const std::uint32_t block = 2 + (words_[off] >> 3);
            if ((words_[off] & 1u) == 0) {
                pairs.emplace_back(static_cast<ClauseRef>(off),
                                   static_cast<ClauseRef>(packed.size()));
                packed.insert(packed.end(), words_.begin() + off, words_.begin() + off + block);
            }
            off += block;
        }
        words_ = std::move(packed);
        freed_ = 0;
        return Remap(std::move(pairs));
    }

    template <class F> void for_each_live(F&& f) const {
        std::size_t off = 0;
        while (off < words_.size()) {
            if ((words_[off] & 1u) == 0) f(static_cast<ClauseRef>(off));
            off += 2 + (words_[off] >> 3);
        }
    }

  private:
    std::vector<std::uint32_t> words_;
    std::size_t freed_ = 0;
    std::uint64_t live_count_ = 0;
};

enum class ReasonKind : std::uint8_t { None, Decision, Initial, Clause };

/// Assignment stack plus per-atom truth, level, and reason. The
/// implication graph of conflict analysis is implicit in the reasons.
class Trail {
  public:
    explicit Trail(std::uint32_t atom_count)
        : value_(atom_count, Truth::Undef),
          level_(atom_count, 0),
          reason_kind_(atom_count, ReasonKind::None),
          reason_(atom_count, kNoClause) {}

    std::uint32_t atom_count() const { return static_cast<std::uint32_t>(value_.size()); }

    Truth value(AtomId atom) const { return value_[atom]; }

    Truth value(Literal l) const { return literal_truth(l, value_[l.atom()]); }

    bool is_true(Literal l) const { return value(l) == Truth::True; }
    bool is_false(Literal l) const { return value(l) == Truth::False; }
    bool is_undef(Literal l) const { return value(l) == Truth::Undef; }

    std::uint32_t level(AtomId atom) const { return level_[atom]; }

    ReasonKind reason_kind(AtomId atom) const { return reason_kind_[atom]; }

    ClauseRef reason(AtomId atom) const { return reason_[atom]; }

    void set_reason(AtomId atom, ClauseRef ref) { reason_[atom] = ref; }

    std::uint32_t current_level() const { return static_cast<std::uint32_t>(marks_.size()); }

    std::uint32_t size() const { return static_cast<std::uint32_t>(stack_.size()); }

    Literal at(std::uint32_t pos) const { return stack_[pos]; }

    std::uint32_t position(AtomId atom) const { return position_[atom]; }

    void assign(Literal l, ReasonKind kind, ClauseRef reason) {
        assert(value(l) == Truth::Undef);
        const AtomId atom = l.atom();
        value_[atom] = l.is_positive() ? Truth::True : Truth::False;
        level_[atom] = current_level();
        reason_kind_[atom] = kind;
        reason_[atom] = reason;
        if (position_.size() < value_.size()) position_.resize(value_.size(), 0);
        position_[atom] = size();
        stack_.push_back(l);
    }

    void new_level() { marks_.push_back(size()); }

    std::uint32_t level_start(std::uint32_t level) const {
        return level == 0 ? 0 : marks_[level - 1];
    }

    template <class F> void backjump(std::uint32_t target_level, F&& on_unassign) {
        assert(target_level <= current_level());
        if (target_level == current_level()) return;
        const std::uint32_t keep = marks_[target_level];
        while (size() > keep) {
            const Literal l = stack_.back();
            stack_.pop_back();
            value_[l.atom()] = Truth::Undef;
            reason_kind_[l.atom()] = ReasonKind::None;
            reason_[l.atom()] = kNoClause;
            on_unassign(l);
        }
        marks_.resize(target_level);
        head = keep;
    }

    std::uint32_t head = 0; // next stack index to propagate

  private:
    std::vector<Truth> value_;
    std::vector<std::uint32_t> level_;
    std::vector<ReasonKind> reason_kind_;
    std::vector<ClauseRef> reason_;
    std::vector<std::uint32_t> position_;
    std::vector<Literal> stack_;
    std::vector<std::uint32_t> marks_;
};

/// Unit propagation over two watched literals, with binary clauses in
/// dedicated implication lists.
class PropagationEngine {
  public:
    explicit PropagationEngine(std::uint32_t atom_count)
        : trail_(atom_count),
          watches_(std::size_t{2} * atom_count),
          binaries_(std::size_t{2} * atom_count) {}

    Trail& trail() { return trail_; }
    const Trail& trail() const { return trail_; }
    ClauseDb& db() { return db_; }
    const ClauseDb& db() const { return db_; }

    bool level0_conflict() const { return level0_conflict_; }

    std::uint64_t propagation_count() const { return propagations_; }

    /// Adds a pre-search clause at level 0. Units are enqueued with
    /// reason "initial"; an empty clause or contradicting unit latches
    /// level0_conflict.
    void add_initial_clause(const Clause& clause);

    /// Adds and watches a clause mid-search without asserting anything.
    /// Literal order is preserved: positions 0 and 1 become the watches.
    ClauseRef add_clause(const std::vector<Literal>& lits, ClauseOrigin origin);

    /// Enqueues a literal. Returns the offending reason on conflict,
    /// nothing on success or no-op.
    std::optional<ClauseRef> enqueue(Literal l, ReasonKind kind, ClauseRef reason);

    /// Propagates to fixpoint. Returns the conflicting clause if any.
    std::optional<ClauseRef> unit_propagate();

    /// Re-evaluates a watched or unit clause under the current trail:
    /// enqueues if unit, reports the clause itself if falsified.
    std::optional<ClauseRef> assert_clause(ClauseRef ref);

    /// Detaches and marks deleted. The clause must not be a reason.
    void remove_clause(ClauseRef ref);

    bool is_reason(ClauseRef ref) const {
        const AtomId atom = db_.lit(ref, 0).atom();
        return trail_.value(atom) != Truth::Undef &&
               trail_.reason_kind(atom) == ReasonKind::Clause && trail_.reason(atom) == ref;
    }

    template <class F> void backjump(std::uint32_t target_level, F&& on_unassign) {
        trail_.backjump(target_level, std::forward<F>(on_unassign));
    }

    bool needs_gc() const { return db_.wasteful(); }

    /// Compacts the arena and rewrites watches, implication lists, and
    /// trail reasons. fix_external receives the remap for refs held
    /// elsewhere.
    template <class F> void garbage_collect(F&& fix_external) {
        const ClauseDb::Remap remap = db_.compact();
        for (auto& list : watches_) {
            for (Watcher& w : list) w.cref = remap(w.cref);
        }
        for (auto& list : binaries_) {
            for (BinWatcher& b : list) b.cref = remap(b.cref);
        }
        for (std::uint32_t i = 0; i < trail_.size(); ++i) {
            const AtomId atom = trail_.at(i).atom();
            if (trail_.reason_kind(atom) == ReasonKind::Clause) {
                trail_.set_reason(atom, remap(trail_.reason(atom)));
            }
        }
        fix_external(remap);
    }

#ifdef SABLE_EXPENSIVE_CHECKS
    /// Watch integrity: every live clause of size ≥ 3 sits in exactly
    /// two watch lists, on two of its own literals.
    bool check_watch_integrity() const;
#endif

  private:
    struct Watcher {
        ClauseRef cref;
        Literal blocker;
    };
    struct BinWatcher {
        Literal other;
        ClauseRef cref;
    };

    void attach(ClauseRef ref);

    ClauseDb db_;
    Trail trail_;
    std::vector<std::vector<Watcher>> watches_;     // by watched literal code
    std::vector<std::vector<BinWatcher>> binaries_; // by falsifiable literal code
    std::uint64_t propagations_ = 0;
    bool level0_conflict_ = false;
};

} // namespace sable

#endif
