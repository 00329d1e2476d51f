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

#include "doctest.h"

#include <vector>

#include "sable/completion.hpp"
#include "sable/propagation.hpp"
#include "sable/textio.hpp"
#include "support.hpp"

namespace sable {
namespace {

const Literal kA = Literal::positive(1);
const Literal kB = Literal::positive(2);
const Literal kC = Literal::positive(3);
const Literal kD = Literal::positive(4);

TEST_CASE("clause db stores, marks and compacts") {
    ClauseDb db;
    ClauseRef r1 = db.add({kA, kB}, ClauseOrigin::Completion);
    ClauseRef r2 = db.add({~kA, kB, kC}, ClauseOrigin::LearnedConflict);
    CHECK(db.clause_size(r1) == 2);
    CHECK(db.clause_size(r2) == 3);
    CHECK(db.origin(r2) == ClauseOrigin::LearnedConflict);
    CHECK(db.literals(r2) == std::vector<Literal>{~kA, kB, kC});
    CHECK(db.live_count() == 2);

    db.set_activity(r2, 2.5f);
    CHECK(db.activity(r2) == 2.5f);

    db.remove(r1);
    CHECK(db.deleted(r1));
    CHECK(db.live_count() == 1);

    auto remap = db.compact();
    ClauseRef moved = remap(r2);
    CHECK(db.literals(moved) == std::vector<Literal>{~kA, kB, kC});
    CHECK(db.activity(moved) == 2.5f);
    CHECK(remap(kNoClause) == kNoClause);

    std::size_t live = 0;
    db.for_each_live([&](ClauseRef) { ++live; });
    CHECK(live == 1);
}

TEST_CASE("trail records levels, positions and reasons") {
    Trail t(5);
    CHECK(t.atom_count() == 5);
    CHECK(t.current_level() == 0);

    t.assign(kA, ReasonKind::Initial, kNoClause);
    t.new_level();
    t.assign(~kB, ReasonKind::Decision, kNoClause);
    t.assign(kC, ReasonKind::Clause, 0);

    CHECK(t.value(kA.atom()) == Truth::True);
    CHECK(t.value(kB.atom()) == Truth::False);
    CHECK(t.is_true(~kB));
    CHECK(t.is_false(kB));
    CHECK(t.is_undef(kD));
    CHECK(t.level(kA.atom()) == 0);
    CHECK(t.level(kB.atom()) == 1);
    CHECK(t.position(kC.atom()) == 2);
    CHECK(t.reason_kind(kC.atom()) == ReasonKind::Clause);
    CHECK(t.level_start(1) == 1);

    std::vector<Literal> undone;
    t.backjump(0, [&](Literal l) { undone.push_back(l); });
    CHECK(undone == std::vector<Literal>{kC, ~kB});
    CHECK(t.size() == 1);
    CHECK(t.is_undef(kB));
    CHECK(t.current_level() == 0);
}

TEST_CASE("enqueue is a no-op on true, a conflict on false") {
    PropagationEngine e(4);
    CHECK(!e.enqueue(kA, ReasonKind::Decision, kNoClause).has_value());
    CHECK(e.trail().is_true(kA));
    std::uint32_t before = e.trail().size();

    CHECK(!e.enqueue(kA, ReasonKind::Decision, kNoClause).has_value());
    CHECK(e.trail().size() == before);

    auto conflict = e.enqueue(~kA, ReasonKind::Clause, 7);
    REQUIRE(conflict.has_value());
    CHECK(*conflict == 7); // the caller's reason comes back
}

TEST_CASE("initial units assert immediately and contradictions latch") {
    PropagationEngine e(4);
    e.add_initial_clause(*Clause::make({kA}));
    CHECK(e.trail().is_true(kA));
    CHECK(e.trail().reason_kind(kA.atom()) == ReasonKind::Initial);
    CHECK(!e.level0_conflict());

    e.add_initial_clause(*Clause::make({~kA}));
    CHECK(e.level0_conflict());

    PropagationEngine f(4);
    f.add_initial_clause(*Clause::make({}));
    CHECK(f.level0_conflict());
}

TEST_CASE("binary chains propagate") {
    PropagationEngine e(5);
    e.add_initial_clause(*Clause::make({~kA, kB}));
    e.add_initial_clause(*Clause::make({~kB, kC}));
    e.add_initial_clause(*Clause::make({kA}));
    CHECK(!e.unit_propagate().has_value());
    CHECK(e.trail().is_true(kB));
    CHECK(e.trail().is_true(kC));
    CHECK(e.propagation_count() == 2);
}

TEST_CASE("long clauses propagate when all but one literal is false") {
    PropagationEngine e(5);
    e.add_initial_clause(*Clause::make({~kA, ~kB, kC}));
    e.add_initial_clause(*Clause::make({kA}));
    CHECK(!e.unit_propagate().has_value());
    CHECK(e.trail().is_undef(kC)); // still two non-false literals

    e.trail().new_level();
    REQUIRE(!e.enqueue(kB, ReasonKind::Decision, kNoClause).has_value());
    CHECK(!e.unit_propagate().has_value());
    CHECK(e.trail().is_true(kC));
    CHECK(e.trail().reason_kind(kC.atom()) == ReasonKind::Clause);
    CHECK(e.db().lit(e.trail().reason(kC.atom()), 0) == kC); // propagated lit leads
}

TEST_CASE("a falsified clause is reported as the conflict") {
    PropagationEngine e(4);
    e.add_initial_clause(*Clause::make({~kA, kB}));
    e.add_initial_clause(*Clause::make({~kA, ~kB}));
    e.add_initial_clause(*Clause::make({kA}));
    auto conflict = e.unit_propagate();
    REQUIRE(conflict.has_value());
    for (Literal l : e.db().literals(*conflict)) CHECK(e.trail().is_false(l));
}

TEST_CASE("completion of one rule propagates everything false") {
    // a :- b, not c.  Units {not b} and {not c} cascade through the
    // rule clauses until a and its applicability atom fall too.
    Program p = parse_program("a :- b, not c.");
    CompletionResult c = complete(p);
    PropagationEngine e(c.total_atom_count());
    for (const Clause& cl : c.clauses.clauses()) e.add_initial_clause(cl);
    REQUIRE(!e.level0_conflict());
    REQUIRE(!e.unit_propagate().has_value());
    CHECK(e.trail().value(1) == Truth::False); // a
    CHECK(e.trail().value(2) == Truth::False); // b
    CHECK(e.trail().value(3) == Truth::False); // c
    CHECK(e.trail().value(4) == Truth::False); // rule atom
}

TEST_CASE("assert_clause re-evaluates an unattached unit") {
    PropagationEngine e(5);
    ClauseRef ref = e.add_clause({kA, kB, kC}, ClauseOrigin::LearnedLoop);
    e.trail().new_level();
    REQUIRE(!e.enqueue(~kA, ReasonKind::Decision, kNoClause).has_value());
    REQUIRE(!e.enqueue(~kB, ReasonKind::Decision, kNoClause).has_value());

    CHECK(!e.assert_clause(ref).has_value());
    CHECK(e.trail().is_true(kC));
    CHECK(e.trail().reason(kC.atom()) == ref);

    PropagationEngine f(5);
    ClauseRef fref = f.add_clause({kA, kB}, ClauseOrigin::LearnedLoop);
    f.trail().new_level();
    REQUIRE(!f.enqueue(~kA, ReasonKind::Decision, kNoClause).has_value());
    REQUIRE(!f.enqueue(~kB, ReasonKind::Decision, kNoClause).has_value());
    auto conflict = f.assert_clause(fref);
    REQUIRE(conflict.has_value());
    CHECK(*conflict == fref);

    CHECK(!f.assert_clause(f.add_clause({kA, kD}, ClauseOrigin::LearnedLoop)).has_value());
    CHECK(f.trail().is_true(kD));
}

TEST_CASE("removing a clause detaches its watches") {
    PropagationEngine e(5);
    ClauseRef ref = e.add_clause({kA, kB, kC}, ClauseOrigin::LearnedConflict);
    e.remove_clause(ref);
    CHECK(e.db().deleted(ref));
    e.trail().new_level();
    REQUIRE(!e.enqueue(~kA, ReasonKind::Decision, kNoClause).has_value());
    REQUIRE(!e.enqueue(~kB, ReasonKind::Decision, kNoClause).has_value());
    CHECK(!e.unit_propagate().has_value());
    CHECK(e.trail().is_undef(kC)); // deleted clause no longer propagates
}

TEST_CASE("propagation agrees with the reference fixpoint") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Rng rng(seed);
        const std::uint32_t atoms = 8;
        auto clauses = testing::random_clauses(rng, atoms, 12, 4);

        PropagationEngine e(atoms);
        for (const auto& lits : clauses) {
            e.add_initial_clause(*Clause::make(lits));
        }
        auto conflict = e.unit_propagate();
        bool engine_conflict = e.level0_conflict() || conflict.has_value();

        auto naive = testing::naive_up_fixpoint(clauses, std::vector<Truth>(atoms, Truth::Undef));
        CHECK(engine_conflict == !naive.has_value());
        if (!engine_conflict && naive.has_value()) {
            for (AtomId a = 0; a < atoms; ++a) {
                CHECK(e.trail().value(a) == (*naive)[a]);
            }
        }
    }
}

#ifdef SABLE_EXPENSIVE_CHECKS
TEST_CASE("watch lists stay consistent through propagation and removal") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Rng rng(seed * 977);
        const std::uint32_t atoms = 10;
        auto clauses = testing::random_clauses(rng, atoms, 15, 5);
        PropagationEngine e(atoms);
        std::vector<ClauseRef> refs;
        for (const auto& lits : clauses) {
            if (lits.size() >= 2) refs.push_back(e.add_clause(lits, ClauseOrigin::Completion));
        }
        CHECK(e.check_watch_integrity());
        e.trail().new_level();
        Literal decision = rng.chance(0.5) ? Literal::positive(1 + rng.next_below(atoms - 1))
                                           : Literal::negative(1 + rng.next_below(atoms - 1));
        if (e.trail().is_undef(decision)) {
            e.enqueue(decision, ReasonKind::Decision, kNoClause);
            e.unit_propagate();
        }
        CHECK(e.check_watch_integrity());
        if (!refs.empty() && !e.is_reason(refs.back())) {
            e.remove_clause(refs.back());
            CHECK(e.check_watch_integrity());
        }
    }
}
#endif

} // namespace
} // namespace sable
