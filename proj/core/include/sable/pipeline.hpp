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

#ifndef SABLE_PIPELINE_HPP
#define SABLE_PIPELINE_HPP

#include <vector>

#include "sable/completion.hpp"
#include "sable/depgraph.hpp"
#include "sable/program.hpp"
#include "sable/simplify.hpp"

namespace sable {

/// Everything the search engine needs: the program (for well-founded
/// propagation), its completion bookkeeping, the dependency graph, and
/// the simplified clause set with its reconstruction log.
struct CompiledProblem {
    Program program;
    AuxMap aux;
    AtomId original_atom_count = 0;
    AtomId total_atoms = 0;
    DepGraph graph;
    ClauseSet clauses;
    ReconstructionLog log;
    std::vector<bool> eliminated; // per atom, under simplification
};

/// Completion, dependency analysis, and (optionally) simplification.
/// Atoms of cyclic SCCs, the aux and body atoms of their rules, and —
/// when freeze_originals is set — all original atoms are pinned through
/// simplification so search-time clauses stay expressible.
CompiledProblem compile(Program p, const SimplifyConfig& cfg, bool enable_simplify,
                        bool freeze_originals);

} // namespace sable

#endif
