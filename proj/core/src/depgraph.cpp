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

#include "sable/depgraph.hpp"

#include <limits>
#include <utility>

namespace sable {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

} // namespace

DepGraph build_dep_graph(const Program& p) {
    const std::size_t n = p.atoms.size();

    std::vector<std::vector<AtomId>> succ(n);
    std::vector<bool> self_loop(n, false);
    for (const Rule& rule : p.rules) {
        if (rule.is_constraint()) continue;
        for (const AtomId b : rule.pos_body) {
            if (b == rule.head) {
                self_loop[rule.head] = true;
            } else {
                succ[rule.head].push_back(b);
            }
        }
    }

    DepGraph g;
    g.scc_id.assign(n, 0);

    // Iterative Tarjan.
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<AtomId> scc_stack;
    std::vector<std::pair<AtomId, std::size_t>> dfs;
    std::uint32_t next_index = 0;

    for (AtomId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        dfs.emplace_back(root, 0);
        index[root] = lowlink[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = true;
        while (!dfs.empty()) {
            auto& [atom, child_pos] = dfs.back();
            if (child_pos < succ[atom].size()) {
                const AtomId child = succ[atom][child_pos++];
                if (index[child] == kUnvisited) {
                    index[child] = lowlink[child] = next_index++;
                    scc_stack.push_back(child);
                    on_stack[child] = true;
                    dfs.emplace_back(child, 0);
                } else if (on_stack[child] && index[child] < lowlink[atom]) {
                    lowlink[atom] = index[child];
                }
            } else {
                const AtomId done = atom;
                dfs.pop_back();
                if (!dfs.empty() && lowlink[done] < lowlink[dfs.back().first]) {
                    lowlink[dfs.back().first] = lowlink[done];
                }
                if (lowlink[done] == index[done]) {
                    const std::uint32_t id = g.scc_count++;
                    std::size_t members = 0;
                    AtomId member;
                    do {
                        member = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[member] = false;
                        g.scc_id[member] = id;
                        ++members;
                    } while (member != done);
                    g.scc_cyclic.push_back(members > 1 || self_loop[done]);
                }
            }
        }
    }

    for (const bool cyclic : g.scc_cyclic) {
        if (cyclic) {
            g.tight = false;
            break;
        }
    }
    return g;
}

} // namespace sable
