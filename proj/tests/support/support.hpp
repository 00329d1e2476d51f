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

#ifndef SABLE_TESTS_SUPPORT_HPP
#define SABLE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sable/completion.hpp"
#include "sable/literal.hpp"
#include "sable/outcome.hpp"
#include "sable/program.hpp"
#include "sable/rng.hpp"
#include "sable/search.hpp"
#include "sable/simplify.hpp"

namespace sable::testing {

/// Reference unit propagation: scan every clause until no change.
/// Returns the final per-atom assignment, or nothing on conflict.
std::optional<std::vector<Truth>> naive_up_fixpoint(const std::vector<std::vector<Literal>>& clauses,
                                                    std::vector<Truth> values);

/// All total assignments over atoms 0..atom_count-1 satisfying every
/// clause, as bitmasks (bit a set = atom a true). atom_count ≤ 20.
std::vector<std::uint32_t> truth_table_models(const std::vector<std::vector<Literal>>& clauses,
                                              std::uint32_t atom_count);

/// The projections of `masks` onto the atoms where `keep` is true,
/// deduplicated. Used to compare clause sets up to eliminated atoms.
std::set<std::uint32_t> project_masks(const std::vector<std::uint32_t>& masks,
                                      const std::vector<bool>& keep);

/// Convenience: parse, compile, and solve a program given as source
/// text. max_models 0 enumerates everything.
struct SolveRun {
    SolveOutcome outcome;
    CompiledProblem problem;
};
SolveRun solve_text(const std::string& text, std::uint64_t max_models,
                    bool simplify = true, SearchConfig config = {},
                    SearchObserver* observer = nullptr);

/// Models as a canonical set-of-sets for equality checks.
std::set<Model> model_set(const std::vector<Model>& models);

/// Answer sets as atom-name sets, independent of interning order.
std::set<std::set<std::string>> named_models(const std::vector<Model>& models,
                                             const AtomTable& atoms);

/// Extends an answer set over original atoms to the completion's aux
/// atoms: aux_r is true iff the body of rule r holds under m.
std::vector<Truth> extend_to_completion(const Program& p, const AuxMap& aux, const Model& m);

/// A ground Hamiltonian-cycle instance over `nodes` vertices and
/// `edges` directed edges; a random Hamiltonian cycle is always seeded
/// into the edge set, so the instance is satisfiable.
std::string hamiltonian_cycle_text(std::uint32_t nodes, std::uint32_t edges, std::uint64_t seed);

/// The pigeonhole principle with holes+1 pigeons as a ground program;
/// inconsistent by construction and conflict-heavy to solve.
std::string pigeonhole_text(std::uint32_t holes);

/// Small random clause sets (for subsumption/propagation differentials).
std::vector<std::vector<Literal>> random_clauses(Rng& rng, std::uint32_t atom_count,
                                                 std::uint32_t clause_count,
                                                 std::uint32_t max_len);

} // namespace sable::testing

#endif
