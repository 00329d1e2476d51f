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

#include "sable/propagation.hpp"

namespace sable {

void PropagationEngine::attach(ClauseRef ref) {
    const std::uint32_t size = db_.clause_size(ref);
    assert(size >= 2);
    const Literal l0 = db_.lit(ref, 0);
    const Literal l1 = db_.lit(ref, 1);
    if (size == 2) {
        binaries_[l0.code()].push_back({l1, ref});
        binaries_[l1.code()].push_back({l0, ref});
    } else {
        watches_[l0.code()].push_back({ref, l1});
        watches_[l1.code()].push_back({ref, l0});
    }
}

void PropagationEngine::add_initial_clause(const Clause& clause) {
    const auto& lits = clause.literals();
    if (lits.empty()) {
        level0_conflict_ = true;
        return;
    }
    const ClauseRef ref = db_.add(lits, clause.origin());
    if (lits.size() == 1) {
        if (enqueue(lits[0], ReasonKind::Initial, kNoClause)) level0_conflict_ = true;
    } else {
        attach(ref);
    }
}

ClauseRef PropagationEngine::add_clause(const std::vector<Literal>& lits, ClauseOrigin origin) {
    const ClauseRef ref = db_.add(lits, origin);
    if (lits.size() >= 2) attach(ref);
    return ref;
}

std::optional<ClauseRef> PropagationEngine::enqueue(Literal l, ReasonKind kind, ClauseRef reason) {
    switch (trail_.value(l)) {
    case Truth::True:
        return std::nullopt;
    case Truth::False:
        return reason;
    case Truth::Undef:
        trail_.assign(l, kind, reason);
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<ClauseRef> PropagationEngine::unit_propagate() {
    while (trail_.head < trail_.size()) {
        const Literal assigned = trail_.at(trail_.head++);
        const Literal falsified = ~assigned;

        for (const BinWatcher& bw : binaries_[falsified.code()]) {
            switch (trail_.value(bw.other)) {
            case Truth::True:
                break;
            case Truth::False:
                return bw.cref;
            case Truth::Undef:
                trail_.assign(bw.other, ReasonKind::Clause, bw.cref);
                ++propagations_;
                break;
            }
        }

        auto& list = watches_[falsified.code()];
        std::size_t kept = 0;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Watcher w = list[i];
            if (trail_.is_true(w.blocker)) {
                list[kept++] = w;
                continue;
            }
            const ClauseRef ref = w.cref;
            if (db_.lit(ref, 0) == falsified) db_.swap_lits(ref, 0, 1);
            const Literal first = db_.lit(ref, 0);
            if (trail_.is_true(first)) {
                list[kept++] = {ref, first};
                continue;
            }
            const std::uint32_t size = db_.clause_size(ref);
            bool moved = false;
            for (std::uint32_t k = 2; k < size; ++k) {
                if (!trail_.is_false(db_.lit(ref, k))) {
                    db_.swap_lits(ref, 1, k);
                    watches_[db_.lit(ref, 1).code()].push_back({ref, first});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // Unit or conflicting on `first`.
            list[kept++] = w;
            if (trail_.is_false(first)) {
                for (std::size_t j = i + 1; j < list.size(); ++j) list[kept++] = list[j];
                list.resize(kept);
                return ref;
            }
            trail_.assign(first, ReasonKind::Clause, ref);
            ++propagations_;
        }
        list.resize(kept);
    }
    return std::nullopt;
}

std::optional<ClauseRef> PropagationEngine::assert_clause(ClauseRef ref) {
    const std::uint32_t size = db_.clause_size(ref);
    std::uint32_t nonfalse = 0;
    Literal candidate = db_.lit(ref, 0);
    for (std::uint32_t i = 0; i < size; ++i) {
        const Literal l = db_.lit(ref, i);
        if (!trail_.is_false(l)) {
            if (trail_.is_true(l)) return std::nullopt;
            candidate = l;
            if (++nonfalse > 1) return std::nullopt;
        }
    }
    if (nonfalse == 0) return ref;
    return enqueue(candidate, ReasonKind::Clause, ref);
}

void PropagationEngine::remove_clause(ClauseRef ref) {
    assert(!is_reason(ref));
    const std::uint32_t size = db_.clause_size(ref);
    const auto detach = [&](auto& lists, Literal l) {
        auto& list = lists[l.code()];
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].cref == ref) {
                list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
                return;
            }
        }
        assert(false && "watcher not found");
    };
    if (size == 2) {
        detach(binaries_, db_.lit(ref, 0));
        detach(binaries_, db_.lit(ref, 1));
    } else if (size >= 3) {
        detach(watches_, db_.lit(ref, 0));
        detach(watches_, db_.lit(ref, 1));
    }
    db_.remove(ref);
}

#ifdef SABLE_EXPENSIVE_CHECKS
bool PropagationEngine::check_watch_integrity() const {
    std::vector<std::uint64_t> seen;
    db_.for_each_live([&](ClauseRef ref) {
        if (db_.clause_size(ref) >= 3) seen.push_back(ref);
    });
    std::vector<std::uint64_t> watched;
    for (std::size_t code = 0; code < watches_.size(); ++code) {
        for (const Watcher& w : watches_[code]) {
            bool owns = false;
            const std::uint32_t size = db_.clause_size(w.cref);
            for (std::uint32_t i = 0; i < 2 && i < size; ++i) {
                if (db_.lit(w.cref, i).code() == code) owns = true;
            }
            if (!owns) return false;
            watched.push_back(w.cref);
        }
    }
    std::sort(seen.begin(), seen.end());
    std::sort(watched.begin(), watched.end());
    if (watched.size() != 2 * seen.size()) return false;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (watched[2 * i] != seen[i] || watched[2 * i + 1] != seen[i]) return false;
    }
    return true;
}
#endif

} // namespace sable
