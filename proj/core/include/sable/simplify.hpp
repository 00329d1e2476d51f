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

#ifndef SABLE_SIMPLIFY_HPP
#define SABLE_SIMPLIFY_HPP

#include <cstdint>
#include <vector>

#include "sable/completion.hpp"

namespace sable {

struct SimplifyConfig {
    std::uint32_t max_elim_occurrences = 20; // skip atoms occurring more often
    std::uint32_t max_clause_growth = 0;     // net new clauses allowed per elimination
    bool freeze_original_atoms = false;
};

/// Per eliminated atom, the clauses that mentioned it at elimination
/// time. Replayed in reverse to extend a model of the simplified set to
/// one of the original set.
struct ReconstructionLog {
    struct Entry {
        AtomId atom;
        std::vector<std::vector<Literal>> clauses;
    };
    std::vector<Entry> entries;

    std::vector<bool> eliminated_atoms(std::size_t atom_count) const {
        std::vector<bool> out(atom_count, false);
        for (const Entry& e : entries) out[e.atom] = true;
        return out;
    }
};

struct SimplifyResult {
    ClauseSet clauses;
    ReconstructionLog log;
};

/// Subsumption, self-subsuming resolution, and bounded atom elimination
/// by clause rewriting. The result is equisatisfiable with c.clauses and
/// equivalent on surviving atoms. ⊥, atoms flagged in extra_frozen, and
/// (under cfg.freeze_original_atoms) all original atoms survive.
/// Inconsistency surfaces as a clause set containing the empty clause.
SimplifyResult simplify(const CompletionResult& c, const SimplifyConfig& cfg,
                        const std::vector<bool>& extra_frozen = {});

/// Extends a total assignment over surviving atoms to the eliminated
/// ones: each log entry is replayed in reverse, the atom defaulting to
/// false and flipping to true when a recorded clause would otherwise be
/// unsatisfied.
std::vector<Truth> reconstruct(std::vector<Truth> model, const ReconstructionLog& log);

} // namespace sable

#endif
