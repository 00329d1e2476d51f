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

#ifndef SABLE_DEPGRAPH_HPP
#define SABLE_DEPGRAPH_HPP

#include <cstdint>
#include <vector>

#include "sable/program.hpp"

namespace sable {

/// Positive dependency graph: an edge a → b for every rule with head a
/// and b in the positive body. Constraints contribute no edges.
struct DepGraph {
    std::vector<std::uint32_t> scc_id;  // per original atom
    std::vector<bool> scc_cyclic;       // per SCC: size > 1, or self-loop
    std::uint32_t scc_count = 0;
    bool tight = true;

    bool atom_in_cycle(AtomId atom) const { return scc_cyclic[scc_id[atom]]; }

    bool same_scc(AtomId a, AtomId b) const { return scc_id[a] == scc_id[b]; }
};

DepGraph build_dep_graph(const Program& p);

} // namespace sable

#endif
