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

#include "sable/pipeline.hpp"

#include <utility>

namespace sable {

CompiledProblem compile(Program p, const SimplifyConfig& cfg, bool enable_simplify,
                        bool freeze_originals) {
    CompiledProblem cp;
    CompletionResult completion = complete(p);
    cp.aux = completion.aux;
    cp.original_atom_count = completion.original_atom_count;
    cp.total_atoms = completion.total_atom_count();
    cp.graph = build_dep_graph(p);

    if (enable_simplify) {
        std::vector<bool> frozen(cp.total_atoms, false);
        for (AtomId a = 0; a < cp.original_atom_count; ++a) {
            if (cp.graph.atom_in_cycle(a)) frozen[a] = true;
        }
        for (std::size_t r = 0; r < p.rules.size(); ++r) {
            const Rule& rule = p.rules[r];
            if (rule.is_constraint() || !cp.graph.atom_in_cycle(rule.head)) continue;
            frozen[cp.aux.aux_of(r)] = true;
            for (const AtomId b : rule.pos_body) frozen[b] = true;
            for (const AtomId c : rule.neg_body) frozen[c] = true;
        }
        SimplifyConfig effective = cfg;
        effective.freeze_original_atoms = cfg.freeze_original_atoms || freeze_originals;
        SimplifyResult simplified = simplify(completion, effective, frozen);
        cp.clauses = std::move(simplified.clauses);
        cp.log = std::move(simplified.log);
    } else {
        cp.clauses = std::move(completion.clauses);
    }
    cp.eliminated = cp.log.eliminated_atoms(cp.total_atoms);
    cp.program = std::move(p);
    return cp;
}

} // namespace sable
