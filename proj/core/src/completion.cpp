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

#include "sable/completion.hpp"

#include <utility>

namespace sable {

CompletionResult complete(const Program& p) {
    const AtomId originals = static_cast<AtomId>(p.atoms.size());
    const std::size_t rule_count = p.rules.size();

    CompletionResult result;
    result.aux = AuxMap(originals, rule_count);
    result.original_atom_count = originals;
    result.clauses.set_atom_count(originals + static_cast<AtomId>(rule_count));

    std::vector<std::vector<std::size_t>> defining(originals);
    for (std::size_t i = 0; i < rule_count; ++i) defining[p.rules[i].head].push_back(i);

    std::vector<Literal> lits;
    const auto emit = [&](ClauseOrigin origin) {
        result.clauses.add(Clause::make(std::move(lits), origin));
        lits.clear();
    };

    // Support clauses: an atom is true only through one of its rules.
    // ⊥ without constraints gets none; its falsity is a solver axiom.
    for (AtomId atom = 0; atom < originals; ++atom) {
        if (atom == kFalsityAtom && defining[atom].empty()) continue;
        lits.push_back(Literal::negative(atom));
        for (const std::size_t i : defining[atom]) {
            lits.push_back(Literal::positive(result.aux.aux_of(i)));
        }
        emit(ClauseOrigin::Completion);
    }

    for (std::size_t i = 0; i < rule_count; ++i) {
        const Rule& rule = p.rules[i];
        const Literal aux = Literal::positive(result.aux.aux_of(i));

        lits = {Literal::positive(rule.head), ~aux};
        emit(ClauseOrigin::Completion);

        lits.push_back(aux);
        for (const AtomId b : rule.pos_body) lits.push_back(Literal::negative(b));
        for (const AtomId c : rule.neg_body) lits.push_back(Literal::positive(c));
        emit(ClauseOrigin::Completion);

        for (const AtomId b : rule.pos_body) {
            lits = {~aux, Literal::positive(b)};
            emit(ClauseOrigin::Completion);
        }
        for (const AtomId c : rule.neg_body) {
            lits = {~aux, Literal::negative(c)};
            emit(ClauseOrigin::Completion);
        }
    }
    return result;
}

} // namespace sable
