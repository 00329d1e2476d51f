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

#ifndef SABLE_CLAUSE_HPP
#define SABLE_CLAUSE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "sable/literal.hpp"

namespace sable {

enum class ClauseOrigin : std::uint8_t {
    Completion,
    LearnedConflict,
    LearnedLoop,
};

/// A duplicate-free disjunction of literals. Tautologies cannot be
/// constructed; Clause::make returns nullopt for them.
class Clause {
public:
    /// Sorts, deduplicates and rejects tautologies (l and ~l in one clause).
    static std::optional<Clause> make(std::vector<Literal> lits,
                                      ClauseOrigin origin = ClauseOrigin::Completion) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 1; i < lits.size(); ++i) {
            if (lits[i].atom() == lits[i - 1].atom()) return std::nullopt;
        }
        return Clause(std::move(lits), origin);
    }

    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    Literal operator[](std::size_t i) const { return lits_[i]; }

    ClauseOrigin origin() const { return origin_; }
    double activity() const { return activity_; }
    void set_activity(double a) { activity_ = a; }

    bool contains(Literal l) const {
        return std::binary_search(lits_.begin(), lits_.end(), l);
    }

    friend bool operator==(const Clause& a, const Clause& b) {
        return a.lits_ == b.lits_;
    }

private:
    Clause(std::vector<Literal> lits, ClauseOrigin origin)
        : lits_(std::move(lits)), origin_(origin) {}

    std::vector<Literal> lits_;
    ClauseOrigin origin_;
    double activity_ = 0.0;
};

/// A clause database over atoms 0..atom_count-1. An empty clause marks the
/// set as unsatisfiable; add() keeps a flag so callers need not rescan.
class ClauseSet {
public:
    ClauseSet() = default;
    explicit ClauseSet(std::size_t atom_count) : atom_count_(atom_count) {}

    void add(Clause c) {
        if (c.empty()) has_empty_ = true;
        clauses_.push_back(std::move(c));
    }
    /// Convenience for Clause::make results; ignores dropped tautologies.
    void add(std::optional<Clause> c) {
        if (c) add(std::move(*c));
    }

    const std::vector<Clause>& clauses() const { return clauses_; }
    std::vector<Clause>& clauses() { return clauses_; }
    std::size_t size() const { return clauses_.size(); }

    std::size_t atom_count() const { return atom_count_; }
    void set_atom_count(std::size_t n) { atom_count_ = n; }

    bool has_empty_clause() const { return has_empty_; }
    void mark_empty_clause() { has_empty_ = true; }

private:
    std::vector<Clause> clauses_;
    std::size_t atom_count_ = 0;
    bool has_empty_ = false;
};

} // namespace sable

#endif
